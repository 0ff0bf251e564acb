#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dronecell/policy.hpp"

namespace dronecell {

// Per-run accumulators.  Times are held as integer slot counts and only
// multiplied out on demand, so identities like "all slots hovered" stay
// exact in floating point.
struct RunMetrics {
  double se_sum = 0.0;
  double se_sum_sq = 0.0;
  std::uint64_t se_samples = 0;

  double delivered_bits = 0.0;
  std::uint64_t completed_requests = 0;

  std::uint64_t comm_slots = 0;   // slots with at least one allocation
  std::uint64_t hover_slots = 0;
  std::uint64_t move_slots = 0;
  double slot_duration_s = 0.1;

  // Order-sensitive digest of every user position the run visited; paired
  // runs must agree on it bit-for-bit.
  std::uint64_t mobility_digest = 14695981039346656037ull;

  double mean_se() const;              // NaN when no slot carried traffic
  double slot_se_std() const;          // sample std over per-slot values
  double communication_time_s() const { return static_cast<double>(comm_slots) * slot_duration_s; }
  double hover_time_s() const { return static_cast<double>(hover_slots) * slot_duration_s; }
  double move_time_s() const { return static_cast<double>(move_slots) * slot_duration_s; }
  double measured_time_s() const {
    return static_cast<double>(hover_slots + move_slots) * slot_duration_s;
  }
};

// Propulsion power: hover plus a piecewise-linear cruise-power curve over
// speed.  Below the first table point the curve is flat; beyond the last
// it extrapolates the final segment, clamped at zero.
struct EnergyModel {
  struct Point {
    double speed_mps = 0.0;
    double power_w = 0.0;

    bool operator==(const Point&) const = default;
  };

  double hover_power_w = 110.0;
  std::vector<Point> move_power = {{10.0, 110.0}, {20.0, 170.0}};

  double move_power_w(double speed_mps) const;
};

// Record one slot's spectral-efficiency sample: the mean of se_values when
// the decision allocated anything, and no sample at all otherwise.
void record_slot_se(RunMetrics& m, const SlotDecision& decision,
                    std::span<const double> se_values);

void fold_position_digest(RunMetrics& m, Vec2 position);

// Gain of the mobile mean over the fixed mean, in percent.  NaN when the
// fixed baseline is not positive.
double compute_seg(double mobile_mean_se, double fixed_mean_se);

// Delivered bits per joule of radio energy (tx power times time spent
// transmitting).  NaN when the run never transmitted.
double compute_cee(const RunMetrics& m, double tx_power_w);

// Propulsion energy over the measured window, from integer slot counts.
double mech_energy_j(const RunMetrics& m, const EnergyModel& energy, double cruise_speed_mps);

// Delivered bits per joule of propulsion energy.
double compute_mee(const RunMetrics& m, const EnergyModel& energy, double cruise_speed_mps);

struct SummaryStats {
  double mean = 0.0;
  double stddev = 0.0;
  std::size_t count = 0;
};

// Mean and sample standard deviation (0 for a single value).
SummaryStats aggregate_runs(std::span<const double> values);

}  // namespace dronecell
