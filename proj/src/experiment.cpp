#include "dronecell/experiment.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <stdexcept>
#include <thread>

#include "dronecell/config_io.hpp"

namespace dronecell {

namespace {

double finite_mean(const std::vector<PairedRunSample>& samples,
                   double PairedRunSample::*field) {
  double sum = 0.0;
  std::size_t n = 0;
  for (const PairedRunSample& s : samples) {
    const double v = s.*field;
    if (std::isfinite(v)) {
      sum += v;
      ++n;
    }
  }
  return n ? sum / static_cast<double>(n) : std::numeric_limits<double>::quiet_NaN();
}

double finite_std(const std::vector<PairedRunSample>& samples,
                  double PairedRunSample::*field) {
  const double mean = finite_mean(samples, field);
  if (!std::isfinite(mean)) return mean;
  double ss = 0.0;
  std::size_t n = 0;
  for (const PairedRunSample& s : samples) {
    const double v = s.*field;
    if (std::isfinite(v)) {
      ss += (v - mean) * (v - mean);
      ++n;
    }
  }
  return n >= 2 ? std::sqrt(ss / (static_cast<double>(n) - 1.0)) : 0.0;
}

PairedRunSample make_sample(const SimConfig& cfg, const PairedMetrics& pm) {
  PairedRunSample s;
  s.seed = cfg.seed;
  const EnergyModel energy = cfg.energy_model();
  const double txp = cfg.tx_power_w();
  s.se_mobile = pm.mobile.mean_se();
  s.se_fixed = pm.fixed.mean_se();
  s.se_slot_std_mobile = pm.mobile.slot_se_std();
  s.cee_mobile = compute_cee(pm.mobile, txp);
  s.cee_fixed = compute_cee(pm.fixed, txp);
  s.mee_mobile = compute_mee(pm.mobile, energy, cfg.drone_speed_mps);
  s.mee_fixed = compute_mee(pm.fixed, energy, cfg.drone_speed_mps);
  s.mech_energy_mobile_j = mech_energy_j(pm.mobile, energy, cfg.drone_speed_mps);
  s.mech_energy_fixed_j = mech_energy_j(pm.fixed, energy, cfg.drone_speed_mps);
  s.completed_mobile = static_cast<double>(pm.mobile.completed_requests);
  s.completed_fixed = static_cast<double>(pm.fixed.completed_requests);
  s.mobility_digest_mobile = pm.mobile.mobility_digest;
  s.mobility_digest_fixed = pm.fixed.mobility_digest;
  return s;
}

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

SweepRow SweepCell::summarize(const std::string& parameter) const {
  SweepRow row;
  row.parameter = parameter;
  row.value = value;
  row.policy = policy;
  row.runs = static_cast<int>(samples.size());
  row.se_mobile = finite_mean(samples, &PairedRunSample::se_mobile);
  row.se_fixed = finite_mean(samples, &PairedRunSample::se_fixed);
  row.seg_percent = compute_seg(row.se_mobile, row.se_fixed);
  row.se_std_runs = finite_std(samples, &PairedRunSample::se_mobile);
  row.se_std_slots = finite_mean(samples, &PairedRunSample::se_slot_std_mobile);
  row.cee_mobile = finite_mean(samples, &PairedRunSample::cee_mobile);
  row.cee_fixed = finite_mean(samples, &PairedRunSample::cee_fixed);
  row.mee_mobile = finite_mean(samples, &PairedRunSample::mee_mobile);
  row.mee_fixed = finite_mean(samples, &PairedRunSample::mee_fixed);
  row.completed_mobile = finite_mean(samples, &PairedRunSample::completed_mobile);
  row.completed_fixed = finite_mean(samples, &PairedRunSample::completed_fixed);
  return row;
}

std::vector<SweepRow> SweepResult::rows() const {
  std::vector<SweepRow> rows;
  rows.reserve(cells.size());
  for (const SweepCell& c : cells) rows.push_back(c.summarize(parameter));
  return rows;
}

SweepResult run_sweep(const SweepSpec& spec, unsigned threads) {
  if (spec.values.empty()) throw std::invalid_argument("run_sweep: empty value list");
  if (spec.replications < 1) throw std::invalid_argument("run_sweep: replications must be >= 1");
  if (spec.policies.empty()) throw std::invalid_argument("run_sweep: no policies given");
  for (const PolicyKind& p : spec.policies)
    if (!p.mobile)
      throw std::invalid_argument(
          "run_sweep: policies must be mobile variants (each is paired with its own fixed "
          "baseline)");

  SweepResult result;
  result.parameter = spec.parameter;
  for (double v : spec.values)
    for (const PolicyKind& p : spec.policies) {
      SweepCell cell;
      cell.value = v;
      cell.policy = p;
      cell.samples.resize(static_cast<std::size_t>(spec.replications));
      result.cells.push_back(std::move(cell));
    }

  const std::size_t reps = static_cast<std::size_t>(spec.replications);
  const std::size_t total_jobs = result.cells.size() * reps;

  // One job = one paired run; job index encodes (cell, replication), and
  // results land in preallocated slots, so the merge is scheduling-free.
  std::vector<std::exception_ptr> errors(total_jobs);
  const auto run_job = [&](std::size_t job) {
    SweepCell& cell = result.cells[job / reps];
    const std::size_t rep = job % reps;
    SimConfig cfg = spec.base;
    try {
      apply_override(cfg, spec.parameter, format_value(cell.value));
      cfg.policy = cell.policy;
      cfg.seed = spec.base.seed + rep;
      validate(cfg);
      cell.samples[rep] = make_sample(cfg, run_paired(cfg));
    } catch (const std::exception& e) {
      throw std::runtime_error("sweep " + spec.parameter + "=" + format_value(cell.value) +
                               " policy=" + policy_name(cell.policy) +
                               " seed=" + std::to_string(spec.base.seed + rep) + ": " + e.what());
    }
  };

  unsigned n_threads = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  n_threads = static_cast<unsigned>(
      std::min<std::size_t>(n_threads, total_jobs));

  if (n_threads <= 1) {
    for (std::size_t job = 0; job < total_jobs; ++job) run_job(job);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t job = next.fetch_add(1); job < total_jobs; job = next.fetch_add(1)) {
          try {
            run_job(job);
          } catch (...) {
            errors[job] = std::current_exception();
          }
        }
      });
    for (std::thread& t : pool) t.join();
    for (const std::exception_ptr& e : errors)
      if (e) std::rethrow_exception(e);  // first failing job in index order
  }
  return result;
}

double user_density(const SimConfig& cfg) {
  if (!(cfg.area_width_m > 0.0)) throw std::domain_error("user_density: width must be positive");
  return static_cast<double>(cfg.num_users) / (cfg.area_width_m * cfg.area_width_m / 100.0);
}

}  // namespace dronecell
