#pragma once

#include <string>
#include <string_view>

#include "dronecell/sim_config.hpp"

namespace dronecell {

// Flat key-value configuration text: one `key = value` per line, `#` to
// end of line is a comment, blank lines ignored.  Keys are documented in
// the README; unknown keys and out-of-range values are rejected with the
// line number and key name.

// Parse a whole document over the defaults, then validate.
SimConfig parse_config(std::string_view text);

SimConfig load_config_file(const std::string& path);

// Apply a single `key`, `value` pair (the CLI's --set and the sweep
// driver both funnel through here).  Checks the key's own range but not
// cross-field consistency; call validate() after the last override.
void apply_override(SimConfig& cfg, std::string_view key, std::string_view value);

// Angle values accept a plain radian float or the form "pi/N".
double parse_angle_rad(std::string_view text);

// One of: ebd, nuf, lbf, fixed-ebd, fixed-nuf, fixed-lbf.
PolicyKind parse_policy_name(std::string_view text);

std::string_view arrival_model_name(ArrivalModel model);

// Emit every key in a fixed order at full precision; parsing the result
// reproduces the config exactly.
std::string serialize_config(const SimConfig& cfg);

}  // namespace dronecell
