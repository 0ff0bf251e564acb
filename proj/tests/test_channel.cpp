#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "dronecell/channel.hpp"
#include "oracle.hpp"

using namespace dronecell;

namespace {

ChannelParams default_channel() { return ChannelParams{}; }

}  // namespace

TEST_SUITE("channel") {

TEST_CASE("dbm conversion hits the frozen 24 dBm value") {
  CHECK(dbm_to_watt(24.0) == doctest::Approx(oracle::kTxPowerW).epsilon(1e-15));
  CHECK(dbm_to_watt(0.0) == doctest::Approx(1e-3).epsilon(1e-15));
  CHECK(dbm_to_watt(30.0) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("elevation angle is exact overhead and at 45 degrees") {
  CHECK(elevation_angle_deg(10.0, 0.0) == 90.0);
  CHECK(elevation_angle_deg(10.0, 10.0) == doctest::Approx(45.0).epsilon(1e-15));
  CHECK(elevation_angle_deg(1.0, 1e6) < 1e-3);
}

TEST_CASE("line of sight probability matches frozen points") {
  EnvironmentParams env;
  CHECK(los_probability(env, 10.0, 0.0) ==
        doctest::Approx(oracle::kPlosNadir).epsilon(1e-15));
  // At theta == alpha the sigmoid collapses to 1/(1+alpha).
  const double theta = env.alpha;
  const double r = 10.0 / std::tan(theta * oracle::kPi / 180.0);
  CHECK(los_probability(env, 10.0, r) ==
        doctest::Approx(oracle::kPlosAtAlpha).epsilon(1e-12));
}

TEST_CASE("line of sight probability decreases with ground distance") {
  EnvironmentParams env;
  double prev = los_probability(env, 10.0, 0.0);
  for (double r : {5.0, 10.0, 20.0, 40.0, 80.0, 160.0}) {
    const double p = los_probability(env, 10.0, r);
    CHECK(p < prev);
    CHECK(p > 0.0);
    CHECK(p < 1.0);
    prev = p;
  }
}

TEST_CASE("path loss matches frozen references at 100 m") {
  PathLossParams loss;
  CHECK(path_loss_db(loss, PathMode::Los, 100.0) ==
        doctest::Approx(oracle::kPathLossLos100m).epsilon(1e-15));
  CHECK(path_loss_db(loss, PathMode::Nlos, 100.0) ==
        doctest::Approx(oracle::kPathLossNlos100m).epsilon(1e-15));
  CHECK(path_loss_db(loss, PathMode::Los, 1.0) ==
        doctest::Approx(41.1).epsilon(1e-15));
}

TEST_CASE("path loss grows with distance and is steeper without line of sight") {
  PathLossParams loss;
  double prev_los = path_loss_db(loss, PathMode::Los, 1.0);
  double prev_nlos = path_loss_db(loss, PathMode::Nlos, 1.0);
  for (double d : {2.0, 5.0, 20.0, 100.0, 500.0}) {
    const double l = path_loss_db(loss, PathMode::Los, d);
    const double n = path_loss_db(loss, PathMode::Nlos, d);
    CHECK(l > prev_los);
    CHECK(n > prev_nlos);
    prev_los = l;
    prev_nlos = n;
  }
  // By 100 m the steeper exponent has overtaken the lower reference loss.
  CHECK(path_loss_db(loss, PathMode::Nlos, 100.0) >
        path_loss_db(loss, PathMode::Los, 100.0));
}

TEST_CASE("path loss refuses the sub-metre region") {
  PathLossParams loss;
  CHECK_THROWS_AS(path_loss_db(loss, PathMode::Los, 0.5), std::domain_error);
  CHECK_THROWS_AS(path_loss_db(loss, PathMode::Nlos, 0.0), std::domain_error);
}

TEST_CASE("noise power matches kTB with the handset noise figure") {
  CHECK(noise_power_w(9.0, 10e6) ==
        doctest::Approx(oracle::kNoise10MhzW).epsilon(1e-15));
  CHECK(noise_power_w(9.0, 1.0) ==
        doctest::Approx(oracle::kNoise1HzW).epsilon(1e-15));
  // Linear in bandwidth.
  CHECK(noise_power_w(9.0, 5e6) ==
        doctest::Approx(oracle::kNoise10MhzW / 2.0).epsilon(1e-15));
}

TEST_CASE("received power splits transmit power with the band") {
  RadioConfig radio;
  CHECK(received_power_w(radio, 82.9, radio.total_bandwidth_hz) ==
        doctest::Approx(oracle::kReceived829Db).epsilon(1e-14));
  // Half the band carries half the power over the same loss.
  CHECK(received_power_w(radio, 82.9, radio.total_bandwidth_hz / 2.0) ==
        doctest::Approx(oracle::kReceived829Db / 2.0).epsilon(1e-14));
}

TEST_CASE("received power rejects empty or oversized slices") {
  RadioConfig radio;
  CHECK_THROWS_AS(received_power_w(radio, 80.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(received_power_w(radio, 80.0, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(received_power_w(radio, 80.0, radio.total_bandwidth_hz * 1.01),
                  std::invalid_argument);
}

TEST_CASE("link geometry derives the slant range and validates inputs") {
  const LinkGeometry g = LinkGeometry::from(3.0, 4.0);
  CHECK(g.slant_m == doctest::Approx(5.0).epsilon(1e-15));
  CHECK_THROWS_AS(LinkGeometry::from(0.0, 4.0), std::domain_error);
  CHECK_THROWS_AS(LinkGeometry::from(-1.0, 4.0), std::domain_error);
  CHECK_THROWS_AS(LinkGeometry::from(10.0, -0.5), std::domain_error);
}

TEST_CASE("spectral efficiency matches frozen values at the default pose") {
  const ChannelParams ch = default_channel();
  const double b = ch.radio.total_bandwidth_hz;
  CHECK(expected_spectral_efficiency(ch, 10.0, 0.0, b) ==
        doctest::Approx(oracle::kSeNadir).epsilon(1e-12));
  CHECK(expected_spectral_efficiency(ch, 10.0, 5.0, b) ==
        doctest::Approx(oracle::kSeR5).epsilon(1e-12));
  CHECK(expected_spectral_efficiency(ch, 10.0, 30.0, b) ==
        doctest::Approx(oracle::kSeR30).epsilon(1e-12));
  CHECK(expected_spectral_efficiency(ch, 10.0, 60.0, b) ==
        doctest::Approx(oracle::kSeR60).epsilon(1e-12));
}

TEST_CASE("spectral efficiency agrees with an independent evaluation on a grid") {
  const ChannelParams ch = default_channel();
  for (double h : {5.0, 10.0, 25.0, 50.0}) {
    for (double r : {0.0, 1.0, 7.5, 22.0, 57.0, 113.0}) {
      const double got = expected_spectral_efficiency(ch, h, r, 10e6);
      const double want = oracle::avg_se(h, r, 10e6);
      CHECK(got == doctest::Approx(want).epsilon(1e-12));
    }
  }
}

TEST_CASE("spectral efficiency is invariant to the allocated slice") {
  const ChannelParams ch = default_channel();
  const double ref = expected_spectral_efficiency(ch, 10.0, 20.0, 10e6);
  for (double b : {1.0, 180e3, 1e6, 5e6, 10e6}) {
    const double se = expected_spectral_efficiency(ch, 10.0, 20.0, b);
    CHECK(std::abs(se - ref) <= 1e-12 * ref);
  }
}

TEST_CASE("spectral efficiency decreases as the user walks away") {
  const ChannelParams ch = default_channel();
  double prev = expected_spectral_efficiency(ch, 10.0, 0.0, 10e6);
  for (double r : {2.0, 5.0, 10.0, 20.0, 40.0, 60.0, 100.0}) {
    const double se = expected_spectral_efficiency(ch, 10.0, r, 10e6);
    CHECK(se < prev);
    CHECK(se > 0.0);
    prev = se;
  }
}

}  // TEST_SUITE
