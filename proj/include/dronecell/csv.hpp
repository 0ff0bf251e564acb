#pragma once

#include <iosfwd>
#include <string>

#include "dronecell/experiment.hpp"

namespace dronecell {

// All CSV output is comma-separated with a header row, LF line endings,
// and numbers at 9 significant digits, so identical results produce
// byte-identical files.
std::string format_sig9(double v);

// One data row for a single run.  Columns: policy, seed, mean_se,
// se_std_slots, delivered_bits, completed_requests, communication_time_s,
// hover_time_s, move_time_s, cee, mee.
void write_run_csv(std::ostream& out, const SimConfig& cfg, const RunMetrics& m);

// One row per (value, policy) grid point.  Columns: parameter, value,
// policy, runs, se_mobile, se_fixed, seg_percent, se_std_runs,
// se_std_slots, cee_mobile, cee_fixed, mee_mobile, mee_fixed,
// completed_mobile, completed_fixed.
void write_sweep_csv(std::ostream& out, const SweepResult& result);

}  // namespace dronecell
