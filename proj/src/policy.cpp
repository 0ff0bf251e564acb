#include "dronecell/policy.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dronecell {

namespace {

double se_at(const PolicyContext& ctx, Vec2 vantage, double height_m, Vec2 user,
             double bandwidth_hz) {
  return expected_spectral_efficiency(ctx.channel, height_m, distance(vantage, user),
                                      bandwidth_hz);
}

// Mean expected spectral efficiency over the active users, seen from p.
double mean_se_objective(const PolicyContext& ctx, Vec2 p, double height_m,
                         std::span<const ActiveRequestView> active, double share_hz) {
  double sum = 0.0;
  for (const ActiveRequestView& a : active) sum += se_at(ctx, p, height_m, a.user_position, share_hz);
  return sum / static_cast<double>(active.size());
}

std::size_t select_nearest(Vec2 vantage, std::span<const ActiveRequestView> active) {
  std::size_t best = 0;
  double best_d2 = distance_sq(vantage, active[0].user_position);
  for (std::size_t i = 1; i < active.size(); ++i) {
    const double d2 = distance_sq(vantage, active[i].user_position);
    if (d2 < best_d2 ||
        (d2 == best_d2 && (active[i].arrival_time_s < active[best].arrival_time_s ||
                           (active[i].arrival_time_s == active[best].arrival_time_s &&
                            active[i].request_id < active[best].request_id)))) {
      best = i;
      best_d2 = d2;
    }
  }
  return best;
}

std::size_t select_least_buffer(const PolicyContext& ctx, Vec2 vantage, double height_m,
                                std::span<const ActiveRequestView> active) {
  // Untransmitted requests share the same backlog, so the efficiency
  // tie-break runs constantly; compute it lazily per comparison.
  auto se_of = [&](const ActiveRequestView& a) {
    return se_at(ctx, vantage, height_m, a.user_position, ctx.total_bandwidth_hz);
  };
  std::size_t best = 0;
  double best_se = se_of(active[0]);
  for (std::size_t i = 1; i < active.size(); ++i) {
    const ActiveRequestView& a = active[i];
    const ActiveRequestView& b = active[best];
    if (a.remaining_bits < b.remaining_bits) {
      best = i;
      best_se = se_of(a);
      continue;
    }
    if (a.remaining_bits > b.remaining_bits) continue;
    const double se = se_of(a);
    if (se > best_se ||
        (se == best_se && (a.arrival_time_s < b.arrival_time_s ||
                           (a.arrival_time_s == b.arrival_time_s && a.request_id < b.request_id)))) {
      best = i;
      best_se = se;
    }
  }
  return best;
}

Vec2 fly_toward(Vec2 from, Vec2 to, double max_step, const AreaSpec& area) {
  const double dist = distance(from, to);
  if (dist <= max_step) return to;  // land exactly, no overshoot
  return area.clamp(from + (max_step / dist) * (to - from));
}

std::vector<BandwidthShare> equal_shares(std::span<const ActiveRequestView> active,
                                         double total_hz) {
  std::vector<BandwidthShare> shares;
  shares.reserve(active.size());
  const double each = total_hz / static_cast<double>(active.size());
  for (const ActiveRequestView& a : active) shares.push_back({a.request_id, each});
  return shares;
}

SlotDecision stay(const DronePose& pose) {
  return {{}, pose.ground_position, false};
}

SlotDecision single_allocation_move(const DronePose& pose, const ActiveRequestView& target,
                                    const PolicyContext& ctx) {
  SlotDecision d;
  d.allocations.push_back({target.request_id, ctx.total_bandwidth_hz});
  d.next_position = fly_toward(pose.ground_position, target.user_position,
                               pose.speed_mps * ctx.slot_duration_s, ctx.area);
  d.moved = d.next_position != pose.ground_position;
  return d;
}

}  // namespace

std::string policy_name(PolicyKind kind) {
  const char* base = kind.strategy == Strategy::EqualBandwidth ? "ebd"
                     : kind.strategy == Strategy::NearestUser  ? "nuf"
                                                               : "lbf";
  return kind.mobile ? base : std::string("fixed-") + base;
}

std::vector<Vec2> candidate_positions(const DronePose& pose, double angle_step_rad,
                                      double dt_s, const AreaSpec& area) {
  if (!(angle_step_rad > 0.0))
    throw std::invalid_argument("candidate positions: angle step must be positive");
  const double m_real = std::numbers::pi / angle_step_rad;
  const long long m = std::llround(m_real);
  if (m < 1 || std::abs(m_real - static_cast<double>(m)) > 1e-9 * static_cast<double>(m))
    throw std::invalid_argument("candidate positions: angle step must divide pi evenly");

  std::vector<Vec2> out;
  out.reserve(2 * static_cast<std::size_t>(m) + 1);
  out.push_back(pose.ground_position);
  const double r = pose.speed_mps * dt_s;
  // Headings m..2m-1 are built as the exact negations of 0..m-1 so that
  // mirrored layouts tie bit-for-bit instead of within rounding error.
  std::vector<Vec2> dirs(2 * static_cast<std::size_t>(m));
  for (std::size_t k = 0; k < static_cast<std::size_t>(m); ++k) {
    const double a = angle_step_rad * static_cast<double>(k);
    dirs[k] = {std::cos(a), std::sin(a)};
    dirs[k + static_cast<std::size_t>(m)] = {-dirs[k].x, -dirs[k].y};
  }
  for (const Vec2& dir : dirs) {
    const Vec2 p = pose.ground_position + r * dir;
    if (area.contains(p)) out.push_back(p);
  }
  return out;
}

SlotDecision decide_equal_bandwidth(const DronePose& pose,
                                    std::span<const ActiveRequestView> active,
                                    const PolicyContext& ctx) {
  if (active.empty()) return stay(pose);
  SlotDecision d;
  d.allocations = equal_shares(active, ctx.total_bandwidth_hz);
  const double share = ctx.total_bandwidth_hz / static_cast<double>(active.size());

  const std::vector<Vec2> cands =
      candidate_positions(pose, ctx.angle_step_rad, ctx.slot_duration_s, ctx.area);
  // cands[0] is the current position; a strict > below means staying wins
  // ties, and earlier (lower-heading) candidates win ties among the rest.
  std::size_t best = 0;
  double best_obj = mean_se_objective(ctx, cands[0], pose.height_m, active, share);
  for (std::size_t i = 1; i < cands.size(); ++i) {
    const double obj = mean_se_objective(ctx, cands[i], pose.height_m, active, share);
    if (obj > best_obj) {
      best = i;
      best_obj = obj;
    }
  }
  d.next_position = cands[best];
  d.moved = d.next_position != pose.ground_position;
  return d;
}

SlotDecision decide_nearest_user(const DronePose& pose,
                                 std::span<const ActiveRequestView> active,
                                 const PolicyContext& ctx) {
  if (active.empty()) return stay(pose);
  return single_allocation_move(pose, active[select_nearest(pose.ground_position, active)], ctx);
}

SlotDecision decide_least_buffer(const DronePose& pose,
                                 std::span<const ActiveRequestView> active,
                                 const PolicyContext& ctx) {
  if (active.empty()) return stay(pose);
  return single_allocation_move(
      pose, active[select_least_buffer(ctx, pose.ground_position, pose.height_m, active)], ctx);
}

SlotDecision decide_fixed(PolicyKind kind, const DronePose& pose,
                          std::span<const ActiveRequestView> active,
                          const PolicyContext& ctx) {
  SlotDecision d;
  d.next_position = ctx.fixed_center;
  d.moved = false;
  if (active.empty()) return d;
  switch (kind.strategy) {
    case Strategy::EqualBandwidth:
      d.allocations = equal_shares(active, ctx.total_bandwidth_hz);
      break;
    case Strategy::NearestUser:
      d.allocations.push_back(
          {active[select_nearest(ctx.fixed_center, active)].request_id, ctx.total_bandwidth_hz});
      break;
    case Strategy::LeastBuffer:
      d.allocations.push_back(
          {active[select_least_buffer(ctx, ctx.fixed_center, pose.height_m, active)].request_id,
           ctx.total_bandwidth_hz});
      break;
  }
  return d;
}

SlotDecision decide_slot(PolicyKind kind, const DronePose& pose,
                         std::span<const ActiveRequestView> active,
                         const PolicyContext& ctx) {
  if (!kind.mobile) return decide_fixed(kind, pose, active, ctx);
  switch (kind.strategy) {
    case Strategy::EqualBandwidth:
      return decide_equal_bandwidth(pose, active, ctx);
    case Strategy::NearestUser:
      return decide_nearest_user(pose, active, ctx);
    case Strategy::LeastBuffer:
      return decide_least_buffer(pose, active, ctx);
  }
  throw std::logic_error("decide_slot: unknown strategy");
}

}  // namespace dronecell
