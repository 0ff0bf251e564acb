#include "dronecell/metrics.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <limits>
#include <stdexcept>

namespace dronecell {

namespace {
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
}

double RunMetrics::mean_se() const {
  if (se_samples == 0) return kNan;
  return se_sum / static_cast<double>(se_samples);
}

double RunMetrics::slot_se_std() const {
  if (se_samples < 2) return 0.0;
  const double n = static_cast<double>(se_samples);
  const double mean = se_sum / n;
  const double var = (se_sum_sq - n * mean * mean) / (n - 1.0);
  return std::sqrt(var > 0.0 ? var : 0.0);
}

double EnergyModel::move_power_w(double speed_mps) const {
  if (move_power.empty()) throw std::logic_error("energy model: empty cruise-power table");
  if (speed_mps <= move_power.front().speed_mps) return move_power.front().power_w;
  for (std::size_t i = 1; i < move_power.size(); ++i) {
    const Point& a = move_power[i - 1];
    const Point& b = move_power[i];
    if (speed_mps <= b.speed_mps) {
      const double t = (speed_mps - a.speed_mps) / (b.speed_mps - a.speed_mps);
      return a.power_w + t * (b.power_w - a.power_w);
    }
  }
  if (move_power.size() == 1) return move_power.back().power_w;
  const Point& a = move_power[move_power.size() - 2];
  const Point& b = move_power.back();
  const double slope = (b.power_w - a.power_w) / (b.speed_mps - a.speed_mps);
  const double p = b.power_w + slope * (speed_mps - b.speed_mps);
  return p > 0.0 ? p : 0.0;
}

void record_slot_se(RunMetrics& m, const SlotDecision& decision,
                    std::span<const double> se_values) {
  if (se_values.size() != decision.allocations.size())
    throw std::logic_error("record_slot_se: sample count does not match allocations");
  if (se_values.empty()) return;  // idle slot: no sample, no comm time
  double sum = 0.0;
  for (double v : se_values) sum += v;
  const double slot_se = sum / static_cast<double>(se_values.size());
  m.se_sum += slot_se;
  m.se_sum_sq += slot_se * slot_se;
  m.se_samples += 1;
  m.comm_slots += 1;
}

void fold_position_digest(RunMetrics& m, Vec2 position) {
  // FNV-1a over the raw coordinate bytes; order-sensitive by construction.
  std::uint64_t h = m.mobility_digest;
  auto fold = [&h](double v) {
    const std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
    for (int i = 0; i < 8; ++i) {
      h ^= (bits >> (8 * i)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  fold(position.x);
  fold(position.y);
  m.mobility_digest = h;
}

double compute_seg(double mobile_mean_se, double fixed_mean_se) {
  if (!(fixed_mean_se > 0.0)) return kNan;
  return 100.0 * (mobile_mean_se - fixed_mean_se) / fixed_mean_se;
}

double compute_cee(const RunMetrics& m, double tx_power_w) {
  if (!(tx_power_w > 0.0)) throw std::domain_error("cee: tx power must be positive");
  if (m.comm_slots == 0) return kNan;
  return m.delivered_bits / (tx_power_w * m.communication_time_s());
}

double mech_energy_j(const RunMetrics& m, const EnergyModel& energy, double cruise_speed_mps) {
  // (hover_slots*Ph + move_slots*Pm) * dt: slot counts are exact integers,
  // so a run that only hovered costs exactly Ph * measured time.
  const double power_sum = static_cast<double>(m.hover_slots) * energy.hover_power_w +
                           static_cast<double>(m.move_slots) * energy.move_power_w(cruise_speed_mps);
  return power_sum * m.slot_duration_s;
}

double compute_mee(const RunMetrics& m, const EnergyModel& energy, double cruise_speed_mps) {
  if (m.hover_slots + m.move_slots == 0)
    throw std::domain_error("mee: no measured slots");
  return m.delivered_bits / mech_energy_j(m, energy, cruise_speed_mps);
}

SummaryStats aggregate_runs(std::span<const double> values) {
  if (values.empty()) throw std::domain_error("aggregate_runs: no values");
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / static_cast<double>(values.size());
  if (values.size() == 1) return {mean, 0.0, 1};
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  const double var = ss / (static_cast<double>(values.size()) - 1.0);
  return {mean, std::sqrt(var), values.size()};
}

}  // namespace dronecell
