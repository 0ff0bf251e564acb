#include "dronecell/mobility.hpp"

#include <stdexcept>

namespace dronecell {

namespace {

Vec2 draw_point(const AreaSpec& area, Rng& rng) {
  const double x = rng.uniform(0.0, area.width_m);
  const double y = rng.uniform(0.0, area.width_m);
  return {x, y};
}

}  // namespace

RwpState rwp_init(const AreaSpec& area, const SpeedRange& speed, Rng& rng) {
  if (!(area.width_m > 0.0)) throw std::invalid_argument("rwp: area width must be positive");
  if (!(speed.min_mps >= 0.0) || !(speed.max_mps >= speed.min_mps))
    throw std::invalid_argument("rwp: bad speed range");
  RwpState s;
  s.position = draw_point(area, rng);
  s.waypoint = draw_point(area, rng);
  s.leg_speed_mps = rng.uniform(speed.min_mps, speed.max_mps);
  return s;
}

RwpState rwp_step(RwpState state, const AreaSpec& area, const SpeedRange& speed,
                  double dt_s, Rng& rng) {
  if (!(dt_s > 0.0)) throw std::invalid_argument("rwp: dt must be positive");
  const double dist = distance(state.position, state.waypoint);
  const double step = state.leg_speed_mps * dt_s;
  if (dist <= step) {
    // Land exactly on the waypoint; leftover slot time is dropped.
    state.position = state.waypoint;
    state.waypoint = draw_point(area, rng);
    state.leg_speed_mps = rng.uniform(speed.min_mps, speed.max_mps);
    return state;
  }
  state.position = area.clamp(state.position + (step / dist) * (state.waypoint - state.position));
  return state;
}

}  // namespace dronecell
