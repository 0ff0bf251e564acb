#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "dronecell/channel.hpp"
#include "dronecell/geometry.hpp"

namespace dronecell {

enum class Strategy { EqualBandwidth, NearestUser, LeastBuffer };

// A policy is a strategy plus whether the drone may move; the fixed
// variants hover at the area center and only allocate bandwidth.
struct PolicyKind {
  Strategy strategy = Strategy::NearestUser;
  bool mobile = true;

  bool operator==(const PolicyKind&) const = default;
};

std::string policy_name(PolicyKind kind);

struct DronePose {
  Vec2 ground_position;
  double height_m = 10.0;
  double speed_mps = 20.0;
};

struct BandwidthShare {
  std::size_t request_id = 0;
  double bandwidth_hz = 0.0;
};

// Start-of-slot snapshot of one active request, as the policies see it.
struct ActiveRequestView {
  std::size_t request_id = 0;
  std::size_t user_id = 0;
  double arrival_time_s = 0.0;
  double remaining_bits = 0.0;
  Vec2 user_position;
};

struct SlotDecision {
  std::vector<BandwidthShare> allocations;  // empty when no one is active
  Vec2 next_position;                       // where the drone ends the slot
  bool moved = false;                       // next_position != current
};

struct PolicyContext {
  ChannelParams channel;
  AreaSpec area;
  double total_bandwidth_hz = 10e6;
  double angle_step_rad = 0.0;   // heading quantum for the search policy
  double slot_duration_s = 0.1;
  Vec2 fixed_center;             // hover point of the immobile variants
};

// Reachable set for one slot: the current position first, then the points
// one slot-step away along each quantized heading k*angle_step
// (k = 0 .. 2*pi/angle_step - 1, counter-clockwise from +x), keeping only
// points inside the area.  angle_step must divide pi a whole number of
// times; opposite headings mirror each other exactly, so symmetric user
// layouts produce exact objective ties.
std::vector<Vec2> candidate_positions(const DronePose& pose, double angle_step_rad,
                                      double dt_s, const AreaSpec& area);

// Equal split of the band over all active requests; the drone then hops to
// whichever reachable candidate maximizes the mean expected spectral
// efficiency over the served users.  Staying put wins ties; among tied
// displaced candidates the lowest heading index wins.
SlotDecision decide_equal_bandwidth(const DronePose& pose,
                                    std::span<const ActiveRequestView> active,
                                    const PolicyContext& ctx);

// Whole band to the request whose user is nearest the drone (ties: earlier
// arrival, then lower request id); the drone flies straight at that user,
// landing exactly on it when within one slot-step.
SlotDecision decide_nearest_user(const DronePose& pose,
                                 std::span<const ActiveRequestView> active,
                                 const PolicyContext& ctx);

// Whole band to the request with the least remaining backlog (ties: higher
// spectral efficiency from the current position, then earlier arrival,
// then lower request id); movement as in the nearest-user policy.
SlotDecision decide_least_buffer(const DronePose& pose,
                                 std::span<const ActiveRequestView> active,
                                 const PolicyContext& ctx);

// Immobile counterpart of any strategy: same allocation rule evaluated
// from the fixed hover point, never any movement.
SlotDecision decide_fixed(PolicyKind kind, const DronePose& pose,
                          std::span<const ActiveRequestView> active,
                          const PolicyContext& ctx);

// Dispatch on the policy kind.
SlotDecision decide_slot(PolicyKind kind, const DronePose& pose,
                         std::span<const ActiveRequestView> active,
                         const PolicyContext& ctx);

}  // namespace dronecell
