#pragma once

namespace dronecell {

// Sigmoid parameters of the line-of-sight probability curve.  Defaults are
// the familiar urban fit.
struct EnvironmentParams {
  double alpha = 11.95;      // dimensionless
  double beta = 0.136;       // 1/degree
};

enum class PathMode { Los, Nlos };

// Mean path loss model: eta(d) = A + 10*gamma*log10(d), d in metres,
// valid from 1 m outward.  Reference losses fold in the carrier frequency,
// so the defaults below assume 2 GHz.
struct PathLossParams {
  double ref_los_db = 41.1;
  double exp_los = 2.09;
  double ref_nlos_db = 33.0;
  double exp_nlos = 3.75;
};

struct RadioConfig {
  double tx_power_w = 0.251188643150958;  // 24 dBm
  double total_bandwidth_hz = 10e6;
  double ue_noise_figure_db = 9.0;
};

struct ChannelParams {
  EnvironmentParams env;
  PathLossParams loss;
  RadioConfig radio;
};

// Drone-to-user geometry; slant_m is derived on construction.
struct LinkGeometry {
  double height_m;
  double ground_m;
  double slant_m;
  static LinkGeometry from(double height_m, double ground_m);
};

double dbm_to_watt(double dbm);

// Elevation angle in degrees as seen from the user; 90 exactly when the
// drone is overhead (no division by zero).
double elevation_angle_deg(double height_m, double ground_m);

double los_probability(const EnvironmentParams& env, double height_m, double ground_m);

double path_loss_db(const PathLossParams& loss, PathMode mode, double slant_m);

// Thermal noise over the allocated band, kTB with the UE noise figure.
double noise_power_w(double ue_noise_figure_db, double bandwidth_hz);

// Power reaching the user over an allocated slice of the band.  Transmit
// power divides proportionally to the slice, so the unassigned remainder
// of the band carries none.
double received_power_w(const RadioConfig& radio, double path_loss_db, double bandwidth_hz);

/**
 * Expected downlink spectral efficiency (bps/Hz) at the given geometry:
 * the LoS/NLoS mixture of Shannon efficiencies, weighted by the
 * line-of-sight probability.  Because both received power and noise scale
 * linearly with the allocated bandwidth, the result is invariant to it;
 * the argument only has to be a positive slice of the band.
 */
double expected_spectral_efficiency(const ChannelParams& ch, double height_m,
                                    double ground_m, double bandwidth_hz);

}  // namespace dronecell
