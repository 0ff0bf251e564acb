#include "dronecell/csv.hpp"

#include <cstdio>
#include <ostream>

namespace dronecell {

std::string format_sig9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

void write_run_csv(std::ostream& out, const SimConfig& cfg, const RunMetrics& m) {
  out << "policy,seed,mean_se,se_std_slots,delivered_bits,completed_requests,"
         "communication_time_s,hover_time_s,move_time_s,cee,mee\n";
  out << policy_name(cfg.policy) << ',' << cfg.seed << ',' << format_sig9(m.mean_se()) << ','
      << format_sig9(m.slot_se_std()) << ',' << format_sig9(m.delivered_bits) << ','
      << m.completed_requests << ',' << format_sig9(m.communication_time_s()) << ','
      << format_sig9(m.hover_time_s()) << ',' << format_sig9(m.move_time_s()) << ','
      << format_sig9(compute_cee(m, cfg.tx_power_w())) << ','
      << format_sig9(compute_mee(m, cfg.energy_model(), cfg.drone_speed_mps)) << '\n';
}

void write_sweep_csv(std::ostream& out, const SweepResult& result) {
  out << "parameter,value,policy,runs,se_mobile,se_fixed,seg_percent,se_std_runs,"
         "se_std_slots,cee_mobile,cee_fixed,mee_mobile,mee_fixed,completed_mobile,"
         "completed_fixed\n";
  for (const SweepRow& r : result.rows()) {
    out << r.parameter << ',' << format_sig9(r.value) << ',' << policy_name(r.policy) << ','
        << r.runs << ',' << format_sig9(r.se_mobile) << ',' << format_sig9(r.se_fixed) << ','
        << format_sig9(r.seg_percent) << ',' << format_sig9(r.se_std_runs) << ','
        << format_sig9(r.se_std_slots) << ',' << format_sig9(r.cee_mobile) << ','
        << format_sig9(r.cee_fixed) << ',' << format_sig9(r.mee_mobile) << ','
        << format_sig9(r.mee_fixed) << ',' << format_sig9(r.completed_mobile) << ','
        << format_sig9(r.completed_fixed) << '\n';
  }
}

}  // namespace dronecell
