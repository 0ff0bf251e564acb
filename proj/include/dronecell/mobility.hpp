#pragma once

#include "dronecell/geometry.hpp"
#include "dronecell/rng.hpp"

namespace dronecell {

struct SpeedRange {
  double min_mps = 0.2;
  double max_mps = 4.0;
};

// Random-waypoint walker with zero pause time: walk to the waypoint at the
// leg speed, then immediately draw a fresh waypoint and speed.
struct RwpState {
  Vec2 position;
  Vec2 waypoint;
  double leg_speed_mps = 0.0;
};

// Draw order is fixed (position x,y; waypoint x,y; speed) so replays match.
RwpState rwp_init(const AreaSpec& area, const SpeedRange& speed, Rng& rng);

// Advance one slot of dt seconds.  Reaching the waypoint lands on it
// exactly (no overshoot) and draws the next leg; a zero-length leg only
// redraws.  The position never leaves the area.
RwpState rwp_step(RwpState state, const AreaSpec& area, const SpeedRange& speed,
                  double dt_s, Rng& rng);

}  // namespace dronecell
