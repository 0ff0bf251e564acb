#pragma once

#include <algorithm>
#include <cmath>

namespace dronecell {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
inline bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }
inline bool operator!=(Vec2 a, Vec2 b) { return !(a == b); }

inline double distance_sq(Vec2 a, Vec2 b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  return dx * dx + dy * dy;
}

// sqrt-based instead of std::hypot: every operation is correctly rounded,
// which keeps trajectories replayable across platforms.
inline double distance(Vec2 a, Vec2 b) { return std::sqrt(distance_sq(a, b)); }
inline double norm(Vec2 v) { return std::sqrt(v.x * v.x + v.y * v.y); }

// Square service area [0, width] x [0, width].
struct AreaSpec {
  double width_m = 80.0;

  bool contains(Vec2 p) const {
    return p.x >= 0.0 && p.x <= width_m && p.y >= 0.0 && p.y <= width_m;
  }

  Vec2 center() const { return {width_m / 2.0, width_m / 2.0}; }

  Vec2 clamp(Vec2 p) const {
    return {std::clamp(p.x, 0.0, width_m), std::clamp(p.y, 0.0, width_m)};
  }
};

}  // namespace dronecell
