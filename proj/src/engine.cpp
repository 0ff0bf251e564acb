#include "dronecell/engine.hpp"

#include <limits>
#include <stdexcept>

namespace dronecell {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::uint64_t kMobilityStream = 1;
constexpr std::uint64_t kTrafficStream = 2;

std::vector<ActiveRequestView> collect_active(const SimState& st, double now_s) {
  std::vector<ActiveRequestView> views;
  const std::vector<std::size_t> ids = active_request_ids(st.requests, now_s);
  views.reserve(ids.size());
  for (std::size_t id : ids) {
    const RequestRecord& r = st.requests[id];
    views.push_back({id, r.user_id, r.arrival_time_s, r.remaining_bits,
                     st.users[r.user_id].mobility.position});
  }
  return views;
}

PolicyContext make_context(const SimConfig& cfg) {
  PolicyContext ctx;
  ctx.channel = cfg.channel_params();
  ctx.area = cfg.area();
  ctx.total_bandwidth_hz = cfg.total_bandwidth_hz();
  ctx.angle_step_rad = cfg.angle_step_rad;
  ctx.slot_duration_s = cfg.slot_duration_s;
  ctx.fixed_center = cfg.area().center();
  return ctx;
}

}  // namespace

SimState init_state(const SimConfig& cfg) {
  SimState st;
  st.drone = {cfg.area().center(), cfg.drone_height_m, cfg.drone_speed_mps};
  st.metrics.slot_duration_s = cfg.slot_duration_s;
  st.users.resize(static_cast<std::size_t>(cfg.num_users));
  st.mobility_rng.reserve(st.users.size());
  st.traffic_rng.reserve(st.users.size());
  const TrafficConfig traffic = cfg.traffic();
  for (std::size_t u = 0; u < st.users.size(); ++u) {
    st.mobility_rng.emplace_back(cfg.seed, kMobilityStream, u);
    st.traffic_rng.emplace_back(cfg.seed, kTrafficStream, u);
    st.users[u].mobility = rwp_init(cfg.area(), cfg.user_speed(), st.mobility_rng[u]);
    st.users[u].next_arrival_s = schedule_next_arrival(traffic, 0.0, st.traffic_rng[u]);
  }
  return st;
}

SlotDecision step(SimState& st, const SimConfig& cfg) {
  const double dt = cfg.slot_duration_s;
  const double now = static_cast<double>(st.slot) * dt;
  const bool measured = st.slot >= cfg.warmup_slots();
  const TrafficConfig traffic = cfg.traffic();

  for (const UserState& u : st.users) fold_position_digest(st.metrics, u.mobility.position);

  // 1. admit due arrivals
  for (std::size_t u = 0; u < st.users.size(); ++u) {
    UserState& user = st.users[u];
    if (cfg.arrival_model == ArrivalModel::ReadingTime) {
      if (user.next_arrival_s <= now) {
        st.requests.push_back(
            {u, user.next_arrival_s, traffic.size_bits(), traffic.size_bits(), {}});
        user.active_request = st.requests.size() - 1;
        user.next_arrival_s = kInf;  // re-armed when the download completes
      }
    } else {
      while (user.next_arrival_s <= now) {
        st.requests.push_back(
            {u, user.next_arrival_s, traffic.size_bits(), traffic.size_bits(), {}});
        user.next_arrival_s = schedule_next_arrival(traffic, user.next_arrival_s, st.traffic_rng[u]);
      }
    }
  }

  // 2. decide from start-of-slot state
  const std::vector<ActiveRequestView> active = collect_active(st, now);
  const PolicyContext ctx = make_context(cfg);
  const SlotDecision decision = decide_slot(cfg.policy, st.drone, active, ctx);

  // 3. transmit at rates fixed by start-of-slot geometry; 4. completions
  // re-arm the user's next reading-time arrival
  std::vector<double> se_values;
  se_values.reserve(decision.allocations.size());
  double drained = 0.0;
  for (const BandwidthShare& share : decision.allocations) {
    RequestRecord req = st.requests[share.request_id];
    const double ground =
        distance(st.drone.ground_position, st.users[req.user_id].mobility.position);
    const double se =
        expected_spectral_efficiency(ctx.channel, cfg.drone_height_m, ground, share.bandwidth_hz);
    se_values.push_back(se);
    const double before = req.remaining_bits;
    req = drain_buffer(req, share.bandwidth_hz * se, dt, now);
    drained += before - req.remaining_bits;
    st.requests[share.request_id] = req;
    if (req.completed()) {
      UserState& owner = st.users[req.user_id];
      owner.active_request.reset();
      if (cfg.arrival_model == ArrivalModel::ReadingTime)
        owner.next_arrival_s =
            schedule_next_arrival(traffic, *req.completion_time_s, st.traffic_rng[req.user_id]);
      if (measured) st.metrics.completed_requests += 1;
    }
  }

  // 5. users move
  for (std::size_t u = 0; u < st.users.size(); ++u)
    st.users[u].mobility =
        rwp_step(st.users[u].mobility, cfg.area(), cfg.user_speed(), dt, st.mobility_rng[u]);

  // 6. drone moves
  st.drone.ground_position = decision.next_position;

  // 7. metrics, measured slots only
  if (measured) {
    record_slot_se(st.metrics, decision, se_values);
    st.metrics.delivered_bits += drained;
    if (decision.moved)
      st.metrics.move_slots += 1;
    else
      st.metrics.hover_slots += 1;
  }

  // 8. advance the clock
  st.slot += 1;
  return decision;
}

RunMetrics run(const SimConfig& cfg) {
  validate(cfg);
  SimState st = init_state(cfg);
  const std::uint64_t slots = cfg.slot_count();
  for (std::uint64_t k = 0; k < slots; ++k) step(st, cfg);
  return st.metrics;
}

PairedMetrics run_paired(const SimConfig& cfg) {
  validate(cfg);
  if (!cfg.policy.mobile)
    throw std::invalid_argument("run_paired: policy must be a mobile variant");
  SimConfig fixed_cfg = cfg;
  fixed_cfg.policy.mobile = false;
  PairedMetrics pm{run(cfg), run(fixed_cfg)};
  // Equal by construction; a mismatch means a policy leaked into the
  // user streams and the comparison is void.
  if (pm.mobile.mobility_digest != pm.fixed.mobility_digest)
    throw std::logic_error("run_paired: user trajectories diverged between the pair");
  return pm;
}

}  // namespace dronecell
