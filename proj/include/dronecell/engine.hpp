#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dronecell/metrics.hpp"
#include "dronecell/mobility.hpp"
#include "dronecell/policy.hpp"
#include "dronecell/rng.hpp"
#include "dronecell/sim_config.hpp"
#include "dronecell/traffic.hpp"

namespace dronecell {

struct UserState {
  RwpState mobility;
  double next_arrival_s = 0.0;  // +inf while a reading-time download is in flight
  std::optional<std::size_t> active_request;  // reading-time model: at most one
};

// Whole simulation state.  Each user owns two private rng substreams
// (mobility and traffic), so the policy in force can never perturb how
// users move — the paired mobile/fixed comparison depends on that.
struct SimState {
  std::uint64_t slot = 0;
  DronePose drone;
  std::vector<UserState> users;
  std::vector<RequestRecord> requests;
  RunMetrics metrics;
  std::vector<Rng> mobility_rng;
  std::vector<Rng> traffic_rng;
};

// Fresh state at slot 0: drone hovering at the area center, users placed
// by their mobility streams, first arrivals scheduled from t = 0.
SimState init_state(const SimConfig& cfg);

// Advance one slot.  Order within the slot: admit due arrivals; decide
// allocation + movement from start-of-slot state; transmit at rates fixed
// by start-of-slot geometry; completions schedule the user's next arrival;
// users take one mobility step; the drone takes up its decided position;
// metrics accumulate (measured slots only).  Returns the decision so
// callers can audit it.
SlotDecision step(SimState& state, const SimConfig& cfg);

// Run the full horizon (round(T/dt) slots) and finalize the metrics.
RunMetrics run(const SimConfig& cfg);

struct PairedMetrics {
  RunMetrics mobile;
  RunMetrics fixed;
};

// Run cfg's mobile policy and its fixed counterpart on the same seed; the
// two runs draw identical mobility streams, so user trajectories match
// sample-path for sample-path.
PairedMetrics run_paired(const SimConfig& cfg);

}  // namespace dronecell
