// Command-line front end: single runs, parameter sweeps, and the preset
// figure bundles, all emitting CSV.
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dronecell/config_io.hpp"
#include "dronecell/csv.hpp"
#include "dronecell/engine.hpp"
#include "dronecell/experiment.hpp"
#include "dronecell/figures.hpp"

namespace {

struct CommonOpts {
  std::string config_path;
  std::vector<std::string> overrides;
  std::string out_path;  // empty = stdout
  std::optional<std::uint64_t> seed;
  std::optional<int> runs;
  unsigned threads = 0;  // 0 = one per core
};

void add_common(CLI::App* sub, CommonOpts& opts) {
  sub->add_option("--config", opts.config_path, "Config file (key = value lines)")
      ->check(CLI::ExistingFile);
  sub->add_option("--set", opts.overrides, "Override one config key (key=value, repeatable)");
  sub->add_option("--out", opts.out_path, "Output CSV path (default: stdout)");
  sub->add_option("--seed", opts.seed, "Master seed (overrides config)");
  sub->add_option("--runs", opts.runs, "Replications per grid point (overrides config)");
  sub->add_option("--threads", opts.threads, "Worker threads for sweeps (0 = one per core)");
}

dronecell::SimConfig load_base(const CommonOpts& opts) {
  using namespace dronecell;
  SimConfig cfg = opts.config_path.empty() ? SimConfig{} : load_config_file(opts.config_path);
  for (const std::string& kv : opts.overrides) {
    const std::size_t eq = kv.find('=');
    if (eq == std::string::npos)
      throw ConfigError("--set expects key=value, got '" + kv + "'");
    apply_override(cfg, kv.substr(0, eq), kv.substr(eq + 1));
  }
  if (opts.seed) cfg.seed = *opts.seed;
  if (opts.runs) cfg.runs = *opts.runs;
  validate(cfg);
  return cfg;
}

// Write through a callback so the file is only created once the result is
// ready; errors carry the path.
void with_output(const std::string& path, const std::function<void(std::ostream&)>& writer) {
  if (path.empty()) {
    writer(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  writer(out);
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<double> parse_value_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const double v = std::stod(item, &used);
      if (used != item.size()) throw std::invalid_argument("");
      values.push_back(v);
    } catch (const std::exception&) {
      throw std::runtime_error("--values: not a number: '" + item + "'");
    }
  }
  if (values.empty()) throw std::runtime_error("--values: empty list");
  return values;
}

std::vector<dronecell::PolicyKind> parse_policy_list(const std::string& text) {
  std::vector<dronecell::PolicyKind> policies;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) policies.push_back(dronecell::parse_policy_name(item));
  if (policies.empty()) throw std::runtime_error("--policies: empty list");
  return policies;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace dronecell;
  CLI::App app{"dronecell: drone base station repositioning simulator"};
  app.require_subcommand(1);

  CommonOpts run_opts;
  CLI::App* cmd_run = app.add_subcommand("run", "One simulation run, one CSV row");
  add_common(cmd_run, run_opts);

  CommonOpts sweep_opts;
  std::string sweep_param;
  std::string sweep_values;
  std::string sweep_policies = "ebd,nuf,lbf";
  CLI::App* cmd_sweep = app.add_subcommand("sweep", "Paired-run parameter sweep");
  add_common(cmd_sweep, sweep_opts);
  cmd_sweep->add_option("--param", sweep_param, "Config key to sweep")->required();
  cmd_sweep->add_option("--values", sweep_values, "Comma-separated values")->required();
  cmd_sweep->add_option("--policies", sweep_policies,
                        "Comma-separated mobile policies (default ebd,nuf,lbf)");

  CommonOpts repro_opts;
  std::string figure_name;
  CLI::App* cmd_repro = app.add_subcommand("reproduce", "Rebuild a preset figure's CSV");
  add_common(cmd_repro, repro_opts);
  cmd_repro->add_option("figure", figure_name, "One of fig2..fig7 (fig5a/fig5b/fig5c)")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_run->parsed()) {
      const SimConfig cfg = load_base(run_opts);
      const RunMetrics m = run(cfg);
      with_output(run_opts.out_path, [&](std::ostream& out) { write_run_csv(out, cfg, m); });
    } else if (cmd_sweep->parsed()) {
      const SimConfig cfg = load_base(sweep_opts);
      SweepSpec spec;
      spec.parameter = sweep_param;
      spec.values = parse_value_list(sweep_values);
      spec.base = cfg;
      spec.replications = cfg.runs;
      spec.policies = parse_policy_list(sweep_policies);
      const SweepResult result = run_sweep(spec, sweep_opts.threads);
      with_output(sweep_opts.out_path,
                  [&](std::ostream& out) { write_sweep_csv(out, result); });
    } else {
      const SimConfig cfg = load_base(repro_opts);
      const std::optional<FigureId> id = figure_from_name(figure_name);
      if (!id) {
        std::string known;
        for (std::string_view n : figure_names()) {
          if (!known.empty()) known += ", ";
          known += n;
        }
        throw std::runtime_error("unknown figure '" + figure_name + "' (known: " + known + ")");
      }
      with_output(repro_opts.out_path, [&](std::ostream& out) {
        reproduce_figure(*id, cfg, out, repro_opts.threads);
      });
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
