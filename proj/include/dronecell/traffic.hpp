#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "dronecell/rng.hpp"

namespace dronecell {

struct TrafficConfig {
  double mean_reading_time_s = 5.0;
  double request_size_bytes = 2e6;  // decimal megabytes; 2 MB = 16e6 bits

  double size_bits() const { return request_size_bytes * 8.0; }
};

// One download request.  remaining_bits counts down from size_bits to 0;
// completion_time_s is set the moment it reaches 0.
struct RequestRecord {
  std::size_t user_id = 0;
  double arrival_time_s = 0.0;
  double size_bits = 0.0;
  double remaining_bits = 0.0;
  std::optional<double> completion_time_s;

  bool completed() const { return completion_time_s.has_value(); }
  bool active_at(double now_s) const { return !completed() && arrival_time_s <= now_s; }
};

// Next request time: reference_time plus an exponential holding time.
double schedule_next_arrival(const TrafficConfig& cfg, double reference_time_s, Rng& rng);

// Serve a request at rate_bps for dt seconds.  Progress is capped at the
// remaining backlog; on emptying it, completion is stamped at the end of
// the slot (now_s + dt_s).
RequestRecord drain_buffer(RequestRecord req, double rate_bps, double dt_s, double now_s);

// Indices of requests active at now_s, ordered by (arrival time, user id,
// index) so every policy sees the same deterministic sequence.
std::vector<std::size_t> active_request_ids(std::span<const RequestRecord> requests,
                                            double now_s);

}  // namespace dronecell
