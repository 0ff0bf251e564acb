#include "dronecell/figures.hpp"

#include <ostream>
#include <stdexcept>

#include "dronecell/csv.hpp"

namespace dronecell {

namespace {

const std::vector<PolicyKind> kAllMobile = {{Strategy::EqualBandwidth, true},
                                            {Strategy::NearestUser, true},
                                            {Strategy::LeastBuffer, true}};

SweepSpec make_spec(const SimConfig& base, std::string parameter, std::vector<double> values,
                    std::vector<PolicyKind> policies) {
  SweepSpec spec;
  spec.parameter = std::move(parameter);
  spec.values = std::move(values);
  spec.base = base;
  spec.replications = base.runs;
  spec.policies = std::move(policies);
  return spec;
}

const SweepRow& row_at(const std::vector<SweepRow>& rows, double value, PolicyKind policy) {
  for (const SweepRow& r : rows)
    if (r.value == value && r.policy == policy) return r;
  throw std::logic_error("figure: missing sweep row");
}

// The SEG-vs-x figures share one layout: x column(s), then one SEG column
// per strategy.
void write_seg_figure(std::ostream& out, const SweepSpec& spec, const SweepResult& result,
                      bool with_density) {
  out << spec.parameter;
  if (with_density) out << ",user_density";
  out << ",seg_ebd,seg_nuf,seg_lbf\n";
  const std::vector<SweepRow> rows = result.rows();
  for (double v : spec.values) {
    out << format_sig9(v);
    if (with_density) {
      SimConfig cfg = spec.base;
      cfg.num_users = static_cast<int>(v);
      out << ',' << format_sig9(user_density(cfg));
    }
    for (const PolicyKind& p : kAllMobile)
      out << ',' << format_sig9(row_at(rows, v, p).seg_percent);
    out << '\n';
  }
}

void write_energy_figure(std::ostream& out, const std::vector<double>& widths,
                         const SweepResult& v20, const SweepResult& v10, bool cee) {
  const PolicyKind nuf = {Strategy::NearestUser, true};
  out << "area_width," << (cee ? "cee_fixed,cee_nuf_v20,cee_nuf_v10"
                               : "mee_fixed,mee_nuf_v20,mee_nuf_v10")
      << '\n';
  const std::vector<SweepRow> rows20 = v20.rows();
  const std::vector<SweepRow> rows10 = v10.rows();
  for (double w : widths) {
    const SweepRow& r20 = row_at(rows20, w, nuf);
    const SweepRow& r10 = row_at(rows10, w, nuf);
    // The fixed baseline never moves, so its run is independent of the
    // cruise speed; the 20 m/s sweep's fixed column stands for both.
    if (cee)
      out << format_sig9(w) << ',' << format_sig9(r20.cee_fixed) << ','
          << format_sig9(r20.cee_mobile) << ',' << format_sig9(r10.cee_mobile) << '\n';
    else
      out << format_sig9(w) << ',' << format_sig9(r20.mee_fixed) << ','
          << format_sig9(r20.mee_mobile) << ',' << format_sig9(r10.mee_mobile) << '\n';
  }
}

}  // namespace

std::optional<FigureId> figure_from_name(std::string_view name) {
  if (name == "fig2") return FigureId::Fig2;
  if (name == "fig3") return FigureId::Fig3;
  if (name == "fig4") return FigureId::Fig4;
  if (name == "fig5a") return FigureId::Fig5a;
  if (name == "fig5b") return FigureId::Fig5b;
  if (name == "fig5c") return FigureId::Fig5c;
  if (name == "fig6") return FigureId::Fig6;
  if (name == "fig7") return FigureId::Fig7;
  return std::nullopt;
}

std::vector<std::string_view> figure_names() {
  return {"fig2", "fig3", "fig4", "fig5a", "fig5b", "fig5c", "fig6", "fig7"};
}

void reproduce_figure(FigureId id, const SimConfig& base, std::ostream& out, unsigned threads) {
  const std::vector<double> widths = {40, 60, 80, 100};
  switch (id) {
    case FigureId::Fig2: {
      SimConfig b = base;
      b.warmup_time_s = 0.0;  // short horizons would vanish behind the warm-up
      const SweepSpec spec = make_spec(b, "sim_time", {50, 100, 150, 200, 250, 300}, kAllMobile);
      write_seg_figure(out, spec, run_sweep(spec, threads), false);
      return;
    }
    case FigureId::Fig3: {
      const SweepSpec spec = make_spec(base, "area_width", widths, kAllMobile);
      write_seg_figure(out, spec, run_sweep(spec, threads), false);
      return;
    }
    case FigureId::Fig4: {
      const SweepSpec spec = make_spec(base, "area_width", widths, kAllMobile);
      const std::vector<SweepRow> rows = run_sweep(spec, threads).rows();
      out << "area_width,se_ebd,se_std_ebd,se_nuf,se_std_nuf,se_lbf,se_std_lbf\n";
      for (double w : widths) {
        out << format_sig9(w);
        for (const PolicyKind& p : kAllMobile) {
          const SweepRow& r = row_at(rows, w, p);
          out << ',' << format_sig9(r.se_mobile) << ',' << format_sig9(r.se_std_runs);
        }
        out << '\n';
      }
      return;
    }
    case FigureId::Fig5a: {
      const SweepSpec spec = make_spec(base, "height", {10, 20, 30, 40, 50}, kAllMobile);
      write_seg_figure(out, spec, run_sweep(spec, threads), false);
      return;
    }
    case FigureId::Fig5b: {
      const SweepSpec spec = make_spec(base, "num_users", {2, 5, 10, 20}, kAllMobile);
      write_seg_figure(out, spec, run_sweep(spec, threads), true);
      return;
    }
    case FigureId::Fig5c: {
      const SweepSpec spec = make_spec(base, "speed", {5, 10, 15, 20}, kAllMobile);
      write_seg_figure(out, spec, run_sweep(spec, threads), false);
      return;
    }
    case FigureId::Fig6:
    case FigureId::Fig7: {
      const PolicyKind nuf = {Strategy::NearestUser, true};
      SimConfig b20 = base;
      b20.drone_speed_mps = 20.0;
      SimConfig b10 = base;
      b10.drone_speed_mps = 10.0;
      const SweepResult r20 = run_sweep(make_spec(b20, "area_width", widths, {nuf}), threads);
      const SweepResult r10 = run_sweep(make_spec(b10, "area_width", widths, {nuf}), threads);
      write_energy_figure(out, widths, r20, r10, id == FigureId::Fig6);
      return;
    }
  }
  throw std::logic_error("reproduce_figure: unknown figure");
}

}  // namespace dronecell
