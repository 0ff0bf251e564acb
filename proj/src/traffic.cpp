#include "dronecell/traffic.hpp"

#include <algorithm>
#include <stdexcept>

namespace dronecell {

double schedule_next_arrival(const TrafficConfig& cfg, double reference_time_s, Rng& rng) {
  if (!(cfg.mean_reading_time_s > 0.0))
    throw std::invalid_argument("traffic: mean reading time must be positive");
  return reference_time_s + rng.exponential(cfg.mean_reading_time_s);
}

RequestRecord drain_buffer(RequestRecord req, double rate_bps, double dt_s, double now_s) {
  if (req.completed()) throw std::logic_error("drain_buffer: request already completed");
  if (!(rate_bps >= 0.0)) throw std::invalid_argument("drain_buffer: negative rate");
  if (!(dt_s > 0.0)) throw std::invalid_argument("drain_buffer: dt must be positive");
  const double progress = std::min(req.remaining_bits, rate_bps * dt_s);
  req.remaining_bits -= progress;
  if (req.remaining_bits <= 0.0) {
    req.remaining_bits = 0.0;
    req.completion_time_s = now_s + dt_s;
  }
  return req;
}

std::vector<std::size_t> active_request_ids(std::span<const RequestRecord> requests,
                                            double now_s) {
  std::vector<std::size_t> ids;
  for (std::size_t i = 0; i < requests.size(); ++i)
    if (requests[i].active_at(now_s)) ids.push_back(i);
  std::sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) {
    const RequestRecord& ra = requests[a];
    const RequestRecord& rb = requests[b];
    if (ra.arrival_time_s != rb.arrival_time_s) return ra.arrival_time_s < rb.arrival_time_s;
    if (ra.user_id != rb.user_id) return ra.user_id < rb.user_id;
    return a < b;
  });
  return ids;
}

}  // namespace dronecell
