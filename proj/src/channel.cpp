#include "dronecell/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dronecell {

LinkGeometry LinkGeometry::from(double height_m, double ground_m) {
  if (!(height_m > 0.0)) throw std::domain_error("link geometry: height must be positive");
  if (!(ground_m >= 0.0)) throw std::domain_error("link geometry: ground distance must be non-negative");
  return {height_m, ground_m, std::sqrt(height_m * height_m + ground_m * ground_m)};
}

double dbm_to_watt(double dbm) { return std::pow(10.0, dbm / 10.0) * 1e-3; }

double elevation_angle_deg(double height_m, double ground_m) {
  if (!(height_m > 0.0)) throw std::domain_error("elevation angle: height must be positive");
  if (!(ground_m >= 0.0)) throw std::domain_error("elevation angle: ground distance must be non-negative");
  if (ground_m == 0.0) return 90.0;
  return std::atan(height_m / ground_m) * (180.0 / std::numbers::pi);
}

double los_probability(const EnvironmentParams& env, double height_m, double ground_m) {
  const double theta = elevation_angle_deg(height_m, ground_m);
  return 1.0 / (1.0 + env.alpha * std::exp(-env.beta * (theta - env.alpha)));
}

double path_loss_db(const PathLossParams& loss, PathMode mode, double slant_m) {
  if (!(slant_m >= 1.0))
    throw std::domain_error("path loss: model invalid below 1 m slant distance");
  const double a = mode == PathMode::Los ? loss.ref_los_db : loss.ref_nlos_db;
  const double g = mode == PathMode::Los ? loss.exp_los : loss.exp_nlos;
  return a + 10.0 * g * std::log10(slant_m);
}

double noise_power_w(double ue_noise_figure_db, double bandwidth_hz) {
  if (!(bandwidth_hz > 0.0)) throw std::domain_error("noise power: bandwidth must be positive");
  // -174 dBm/Hz thermal floor plus the receiver noise figure.
  const double density_dbm_hz = -174.0 + ue_noise_figure_db;
  return std::pow(10.0, density_dbm_hz / 10.0) * bandwidth_hz * 1e-3;
}

double received_power_w(const RadioConfig& radio, double path_loss_db, double bandwidth_hz) {
  if (!(bandwidth_hz > 0.0))
    throw std::invalid_argument("received power: bandwidth must be positive");
  if (bandwidth_hz > radio.total_bandwidth_hz * (1.0 + 1e-12))
    throw std::invalid_argument("received power: allocation exceeds the total band");
  return (bandwidth_hz / radio.total_bandwidth_hz) * radio.tx_power_w *
         std::pow(10.0, -path_loss_db / 10.0);
}

double expected_spectral_efficiency(const ChannelParams& ch, double height_m,
                                    double ground_m, double bandwidth_hz) {
  const LinkGeometry g = LinkGeometry::from(height_m, ground_m);
  const double p_los = los_probability(ch.env, height_m, ground_m);
  const double noise = noise_power_w(ch.radio.ue_noise_figure_db, bandwidth_hz);
  const double s_los =
      received_power_w(ch.radio, path_loss_db(ch.loss, PathMode::Los, g.slant_m), bandwidth_hz);
  const double s_nlos =
      received_power_w(ch.radio, path_loss_db(ch.loss, PathMode::Nlos, g.slant_m), bandwidth_hz);
  return p_los * std::log2(1.0 + s_los / noise) +
         (1.0 - p_los) * std::log2(1.0 + s_nlos / noise);
}

}  // namespace dronecell
