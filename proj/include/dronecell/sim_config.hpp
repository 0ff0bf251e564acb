#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "dronecell/channel.hpp"
#include "dronecell/metrics.hpp"
#include "dronecell/mobility.hpp"
#include "dronecell/policy.hpp"
#include "dronecell/traffic.hpp"

namespace dronecell {

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Request arrivals: reading_time holds the next draw until the previous
// download finishes (at most one outstanding request per user); poisson
// draws the next arrival from the previous arrival regardless of service.
enum class ArrivalModel { ReadingTime, Poisson };

// Full description of one simulation.  Field defaults are the reference
// operating point; every value can be overridden from a config file or
// the command line.
struct SimConfig {
  double area_width_m = 80.0;
  int num_users = 5;
  double total_bandwidth_mhz = 10.0;
  double carrier_frequency_mhz = 2000.0;  // informational; folded into the loss constants
  double drone_height_m = 10.0;
  double drone_speed_mps = 20.0;
  double tx_power_dbm = 24.0;
  double mean_reading_time_s = 5.0;
  double request_size_mbytes = 2.0;
  double ue_noise_figure_db = 9.0;
  double env_alpha = 11.95;
  double env_beta = 0.136;
  double path_loss_ref_los_db = 41.1;
  double path_loss_exp_los = 2.09;
  double path_loss_ref_nlos_db = 33.0;
  double path_loss_exp_nlos = 3.75;
  double sim_time_s = 300.0;
  double warmup_time_s = 100.0;
  double slot_duration_s = 0.1;
  double angle_step_rad = std::numbers::pi / 36.0;
  double hover_power_w = 110.0;
  std::vector<EnergyModel::Point> move_power_w = {{10.0, 110.0}, {20.0, 170.0}};
  double user_speed_min_mps = 0.2;
  double user_speed_max_mps = 4.0;
  PolicyKind policy = {Strategy::NearestUser, true};
  ArrivalModel arrival_model = ArrivalModel::ReadingTime;
  std::uint64_t seed = 1;
  int runs = 200;

  bool operator==(const SimConfig&) const = default;

  double total_bandwidth_hz() const { return total_bandwidth_mhz * 1e6; }
  double tx_power_w() const { return dbm_to_watt(tx_power_dbm); }
  std::uint64_t slot_count() const {
    return static_cast<std::uint64_t>(std::llround(sim_time_s / slot_duration_s));
  }
  std::uint64_t warmup_slots() const {
    return static_cast<std::uint64_t>(std::llround(warmup_time_s / slot_duration_s));
  }

  AreaSpec area() const { return {area_width_m}; }
  SpeedRange user_speed() const { return {user_speed_min_mps, user_speed_max_mps}; }
  TrafficConfig traffic() const { return {mean_reading_time_s, request_size_mbytes * 1e6}; }
  EnergyModel energy_model() const { return {hover_power_w, move_power_w}; }
  ChannelParams channel_params() const {
    return {{env_alpha, env_beta},
            {path_loss_ref_los_db, path_loss_exp_los, path_loss_ref_nlos_db, path_loss_exp_nlos},
            {tx_power_w(), total_bandwidth_hz(), ue_noise_figure_db}};
  }
};

// Throws ConfigError naming the offending key on any out-of-range value or
// inconsistent combination.
void validate(const SimConfig& cfg);

}  // namespace dronecell
