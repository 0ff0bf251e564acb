#include "dronecell/sim_config.hpp"

#include <cmath>

namespace dronecell {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

}  // namespace

void validate(const SimConfig& cfg) {
  require(cfg.area_width_m > 0.0, "area_width_m must be positive");
  require(cfg.num_users >= 0, "num_users must be non-negative");
  require(cfg.total_bandwidth_mhz > 0.0, "total_bandwidth_mhz must be positive");
  require(cfg.carrier_frequency_mhz > 0.0, "carrier_frequency_mhz must be positive");
  require(cfg.drone_height_m > 0.0, "drone_height_m must be positive");
  require(cfg.drone_speed_mps >= 0.0, "drone_speed_mps must be non-negative");
  require(std::isfinite(cfg.tx_power_dbm), "tx_power_dbm must be finite");
  require(cfg.mean_reading_time_s > 0.0, "mean_reading_time_s must be positive");
  require(cfg.request_size_mbytes > 0.0, "request_size_mbytes must be positive");
  require(std::isfinite(cfg.ue_noise_figure_db), "ue_noise_figure_db must be finite");
  require(cfg.env_alpha > 0.0, "env_alpha must be positive");
  require(cfg.env_beta > 0.0, "env_beta must be positive");
  require(cfg.path_loss_exp_los > 0.0, "path_loss_exp_los must be positive");
  require(cfg.path_loss_exp_nlos > 0.0, "path_loss_exp_nlos must be positive");
  require(std::isfinite(cfg.path_loss_ref_los_db), "path_loss_ref_los_db must be finite");
  require(std::isfinite(cfg.path_loss_ref_nlos_db), "path_loss_ref_nlos_db must be finite");
  require(cfg.sim_time_s > 0.0, "sim_time_s must be positive");
  require(cfg.warmup_time_s >= 0.0, "warmup_time_s must be non-negative");
  require(cfg.warmup_time_s < cfg.sim_time_s, "warmup_time_s must be below sim_time_s");
  require(cfg.slot_duration_s > 0.0, "slot_duration_s must be positive");

  // The horizon and warm-up must land on slot boundaries (within one slot
  // of rounding), or the measurement window would be ill-defined.
  const double slots = cfg.sim_time_s / cfg.slot_duration_s;
  require(std::abs(slots - std::round(slots)) * cfg.slot_duration_s <= cfg.slot_duration_s &&
              cfg.slot_count() >= 1,
          "sim_time_s must be a whole number of slots");
  const double wslots = cfg.warmup_time_s / cfg.slot_duration_s;
  require(std::abs(wslots - std::round(wslots)) * cfg.slot_duration_s <= cfg.slot_duration_s,
          "warmup_time_s must be a whole number of slots");
  require(cfg.warmup_slots() < cfg.slot_count(),
          "warmup_time_s leaves no measured slots");

  require(cfg.angle_step_rad > 0.0, "angle_step_rad must be positive");
  const double m = std::numbers::pi / cfg.angle_step_rad;
  require(std::abs(m - std::round(m)) <= 1e-9 * m && m >= 1.0,
          "angle_step_rad must divide pi evenly");

  require(cfg.hover_power_w > 0.0, "hover_power_w must be positive");
  require(!cfg.move_power_w.empty(), "move_power_w must list at least one speed:power point");
  for (std::size_t i = 0; i < cfg.move_power_w.size(); ++i) {
    require(cfg.move_power_w[i].speed_mps > 0.0 && cfg.move_power_w[i].power_w > 0.0,
            "move_power_w entries must be positive");
    if (i > 0)
      require(cfg.move_power_w[i - 1].speed_mps < cfg.move_power_w[i].speed_mps,
              "move_power_w speeds must be strictly increasing");
  }

  require(cfg.user_speed_min_mps >= 0.0, "user_speed_min_mps must be non-negative");
  require(cfg.user_speed_max_mps >= cfg.user_speed_min_mps,
          "user_speed_max_mps must be at least user_speed_min_mps");
  require(cfg.runs >= 1, "runs must be at least 1");
}

}  // namespace dronecell
