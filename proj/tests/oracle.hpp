#pragma once

// Straight-line reference formulas, written independently of the library
// implementation (no shared helpers), plus expected values frozen from an
// arbitrary-precision evaluation of the same closed forms.  Tests compare
// the library against these, never the library against itself.

#include <cmath>

namespace oracle {

inline constexpr double kPi = 3.14159265358979323846;

// Urban defaults used throughout.
inline constexpr double kAlpha = 11.95;
inline constexpr double kBeta = 0.136;
inline constexpr double kRefLos = 41.1;
inline constexpr double kExpLos = 2.09;
inline constexpr double kRefNlos = 33.0;
inline constexpr double kExpNlos = 3.75;
inline constexpr double kNoiseFigureDb = 9.0;
inline constexpr double kTxDbm = 24.0;
inline constexpr double kBandHz = 10e6;

inline double theta_deg(double h, double r) {
  return r == 0.0 ? 90.0 : std::atan(h / r) * 180.0 / kPi;
}

inline double plos(double h, double r) {
  return 1.0 / (1.0 + kAlpha * std::exp(-kBeta * (theta_deg(h, r) - kAlpha)));
}

inline double path_loss(double a, double gamma, double d) {
  return a + 10.0 * gamma * std::log10(d);
}

inline double noise_w(double b_hz) {
  return std::pow(10.0, (-174.0 + kNoiseFigureDb) / 10.0) * b_hz * 1e-3;
}

inline double tx_w() { return std::pow(10.0, kTxDbm / 10.0) * 1e-3; }

inline double received_w(double eta_db, double b_hz, double total_hz = kBandHz) {
  return (b_hz / total_hz) * tx_w() * std::pow(10.0, -eta_db / 10.0);
}

inline double avg_se(double h, double r, double b_hz, double total_hz = kBandHz) {
  const double d = std::sqrt(h * h + r * r);
  const double p = plos(h, r);
  const double n = noise_w(b_hz);
  const double s_los = received_w(path_loss(kRefLos, kExpLos, d), b_hz, total_hz);
  const double s_nlos = received_w(path_loss(kRefNlos, kExpNlos, d), b_hz, total_hz);
  return p * std::log2(1.0 + s_los / n) + (1.0 - p) * std::log2(1.0 + s_nlos / n);
}

// Frozen expected values (arbitrary-precision evaluation of the forms above).
inline constexpr double kTxPowerW = 0.251188643150958;          // 24 dBm
inline constexpr double kPlosNadir = 0.9997067139222499;        // h=10, r=0
inline constexpr double kPlosAtAlpha = 0.07722007722007722;     // theta = alpha -> 1/12.95
inline constexpr double kNoise10MhzW = 3.162277660168379e-13;
inline constexpr double kNoise1HzW = 3.162277660168379e-20;
inline constexpr double kPathLossLos100m = 82.9;
inline constexpr double kPathLossNlos100m = 108.0;
inline constexpr double kReceived829Db = 1.288249551693134e-09;  // eta=82.9, full band
inline constexpr double kSeNadir = 18.934164890570333;           // h=10, r=0
inline constexpr double kSeR5 = 18.56532573952027;               // h=10, r=5
inline constexpr double kSeR30 = 10.822443731841512;             // h=10, r=30
inline constexpr double kSeR60 = 6.762720740971304;              // h=10, r=60
inline constexpr double kSeNadirNarrow = 23.256090245957409;     // h=10, r=0, 0.5 MHz total
inline constexpr double kTxRoundedW = 0.2512;                    // 24 dBm at 4 significant digits
inline constexpr double kCeeExample = 31847133.757961784;        // 1.6e9/(0.2512W*200s)
inline constexpr double kMeeExample = 72727.27272727272;         // 1.6e9/(110W*200s)

}  // namespace oracle
