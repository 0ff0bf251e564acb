#include "dronecell/config_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace dronecell {

namespace {

std::string_view trim(std::string_view s) {
  const auto issp = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && issp(s.front())) s.remove_prefix(1);
  while (!s.empty() && issp(s.back())) s.remove_suffix(1);
  return s;
}

double parse_double(std::string_view key, std::string_view value) {
  const std::string v(trim(value));
  try {
    std::size_t used = 0;
    const double x = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument("");
    return x;
  } catch (const std::exception&) {
    throw ConfigError(std::string(key) + ": not a number: '" + v + "'");
  }
}

int parse_int(std::string_view key, std::string_view value) {
  const double x = parse_double(key, value);
  const int i = static_cast<int>(x);
  if (static_cast<double>(i) != x)
    throw ConfigError(std::string(key) + ": not an integer: '" + std::string(trim(value)) + "'");
  return i;
}

std::uint64_t parse_u64(std::string_view key, std::string_view value) {
  const std::string v(trim(value));
  std::uint64_t x = 0;
  const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc() || p != v.data() + v.size())
    throw ConfigError(std::string(key) + ": not an unsigned integer: '" + v + "'");
  return x;
}

ArrivalModel parse_arrival_model(std::string_view value) {
  const std::string v(trim(value));
  if (v == "reading_time") return ArrivalModel::ReadingTime;
  if (v == "poisson") return ArrivalModel::Poisson;
  throw ConfigError("arrival_model: expected reading_time or poisson, got '" + v + "'");
}

// "10:110,20:170" -> ordered (speed, power) pairs
std::vector<EnergyModel::Point> parse_move_power(std::string_view value) {
  std::vector<EnergyModel::Point> points;
  std::stringstream ss{std::string(trim(value))};
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos)
      throw ConfigError("move_power: expected speed:watts pairs, got '" + item + "'");
    points.push_back({parse_double("move_power", item.substr(0, colon)),
                      parse_double("move_power", item.substr(colon + 1))});
  }
  if (points.empty()) throw ConfigError("move_power: empty list");
  return points;
}

std::string format_move_power(const std::vector<EnergyModel::Point>& points) {
  std::string out;
  char buf[64];
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) out += ',';
    std::snprintf(buf, sizeof buf, "%.17g:%.17g", points[i].speed_mps, points[i].power_w);
    out += buf;
  }
  return out;
}

void check(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

}  // namespace

PolicyKind parse_policy_name(std::string_view text) {
  const std::string v(trim(text));
  for (Strategy s : {Strategy::EqualBandwidth, Strategy::NearestUser, Strategy::LeastBuffer})
    for (bool mobile : {true, false})
      if (v == policy_name({s, mobile})) return {s, mobile};
  throw ConfigError("policy: unknown policy '" + v +
                    "' (expected ebd, nuf, lbf, fixed-ebd, fixed-nuf, fixed-lbf)");
}

double parse_angle_rad(std::string_view text) {
  const std::string_view t = trim(text);
  if (t.substr(0, 3) == "pi/") {
    const double div = parse_double("angle_step", t.substr(3));
    check(div > 0.0, "angle_step: divisor must be positive");
    return std::numbers::pi / div;
  }
  if (t == "pi") return std::numbers::pi;
  return parse_double("angle_step", t);
}

std::string_view arrival_model_name(ArrivalModel model) {
  return model == ArrivalModel::ReadingTime ? "reading_time" : "poisson";
}

void apply_override(SimConfig& cfg, std::string_view key, std::string_view value) {
  const std::string k(trim(key));
  // Per-key range checks fire here so a bad value is reported against the
  // exact line/override that set it; validate() re-checks the whole.
  if (k == "area_width") {
    cfg.area_width_m = parse_double(k, value);
    check(cfg.area_width_m > 0.0, "area_width must be positive");
  } else if (k == "num_users") {
    cfg.num_users = parse_int(k, value);
    check(cfg.num_users >= 0, "num_users must be non-negative");
  } else if (k == "bandwidth") {
    cfg.total_bandwidth_mhz = parse_double(k, value);
    check(cfg.total_bandwidth_mhz > 0.0, "bandwidth must be positive");
  } else if (k == "carrier_frequency") {
    cfg.carrier_frequency_mhz = parse_double(k, value);
    check(cfg.carrier_frequency_mhz > 0.0, "carrier_frequency must be positive");
  } else if (k == "height") {
    cfg.drone_height_m = parse_double(k, value);
    check(cfg.drone_height_m > 0.0, "height must be positive");
  } else if (k == "speed") {
    cfg.drone_speed_mps = parse_double(k, value);
    check(cfg.drone_speed_mps >= 0.0, "speed must be non-negative");
  } else if (k == "tx_power") {
    cfg.tx_power_dbm = parse_double(k, value);
  } else if (k == "mean_reading_time") {
    cfg.mean_reading_time_s = parse_double(k, value);
    check(cfg.mean_reading_time_s > 0.0, "mean_reading_time must be positive");
  } else if (k == "request_size") {
    cfg.request_size_mbytes = parse_double(k, value);
    check(cfg.request_size_mbytes > 0.0, "request_size must be positive");
  } else if (k == "ue_noise_figure") {
    cfg.ue_noise_figure_db = parse_double(k, value);
  } else if (k == "env_alpha") {
    cfg.env_alpha = parse_double(k, value);
    check(cfg.env_alpha > 0.0, "env_alpha must be positive");
  } else if (k == "env_beta") {
    cfg.env_beta = parse_double(k, value);
    check(cfg.env_beta > 0.0, "env_beta must be positive");
  } else if (k == "path_loss_ref_los") {
    cfg.path_loss_ref_los_db = parse_double(k, value);
  } else if (k == "path_loss_exp_los") {
    cfg.path_loss_exp_los = parse_double(k, value);
    check(cfg.path_loss_exp_los > 0.0, "path_loss_exp_los must be positive");
  } else if (k == "path_loss_ref_nlos") {
    cfg.path_loss_ref_nlos_db = parse_double(k, value);
  } else if (k == "path_loss_exp_nlos") {
    cfg.path_loss_exp_nlos = parse_double(k, value);
    check(cfg.path_loss_exp_nlos > 0.0, "path_loss_exp_nlos must be positive");
  } else if (k == "sim_time") {
    cfg.sim_time_s = parse_double(k, value);
    check(cfg.sim_time_s > 0.0, "sim_time must be positive");
  } else if (k == "warmup_time") {
    cfg.warmup_time_s = parse_double(k, value);
    check(cfg.warmup_time_s >= 0.0, "warmup_time must be non-negative");
  } else if (k == "slot_duration") {
    cfg.slot_duration_s = parse_double(k, value);
    check(cfg.slot_duration_s > 0.0, "slot_duration must be positive");
  } else if (k == "angle_step") {
    cfg.angle_step_rad = parse_angle_rad(value);
    check(cfg.angle_step_rad > 0.0, "angle_step must be positive");
  } else if (k == "hover_power") {
    cfg.hover_power_w = parse_double(k, value);
    check(cfg.hover_power_w > 0.0, "hover_power must be positive");
  } else if (k == "move_power") {
    cfg.move_power_w = parse_move_power(value);
  } else if (k == "user_speed_min") {
    cfg.user_speed_min_mps = parse_double(k, value);
    check(cfg.user_speed_min_mps >= 0.0, "user_speed_min must be non-negative");
  } else if (k == "user_speed_max") {
    cfg.user_speed_max_mps = parse_double(k, value);
    check(cfg.user_speed_max_mps >= 0.0, "user_speed_max must be non-negative");
  } else if (k == "policy") {
    cfg.policy = parse_policy_name(value);
  } else if (k == "arrival_model") {
    cfg.arrival_model = parse_arrival_model(value);
  } else if (k == "seed") {
    cfg.seed = parse_u64(k, value);
  } else if (k == "runs") {
    cfg.runs = parse_int(k, value);
    check(cfg.runs >= 1, "runs must be at least 1");
  } else {
    throw ConfigError("unknown key '" + k + "'");
  }
}

SimConfig parse_config(std::string_view text) {
  SimConfig cfg;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    try {
      apply_override(cfg, line.substr(0, eq), line.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  validate(cfg);
  return cfg;
}

SimConfig load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_config(buf.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

std::string serialize_config(const SimConfig& cfg) {
  std::ostringstream out;
  char buf[64];
  const auto num = [&buf](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
  };
  out << "area_width = " << num(cfg.area_width_m) << '\n';
  out << "num_users = " << cfg.num_users << '\n';
  out << "bandwidth = " << num(cfg.total_bandwidth_mhz) << '\n';
  out << "carrier_frequency = " << num(cfg.carrier_frequency_mhz) << '\n';
  out << "height = " << num(cfg.drone_height_m) << '\n';
  out << "speed = " << num(cfg.drone_speed_mps) << '\n';
  out << "tx_power = " << num(cfg.tx_power_dbm) << '\n';
  out << "mean_reading_time = " << num(cfg.mean_reading_time_s) << '\n';
  out << "request_size = " << num(cfg.request_size_mbytes) << '\n';
  out << "ue_noise_figure = " << num(cfg.ue_noise_figure_db) << '\n';
  out << "env_alpha = " << num(cfg.env_alpha) << '\n';
  out << "env_beta = " << num(cfg.env_beta) << '\n';
  out << "path_loss_ref_los = " << num(cfg.path_loss_ref_los_db) << '\n';
  out << "path_loss_exp_los = " << num(cfg.path_loss_exp_los) << '\n';
  out << "path_loss_ref_nlos = " << num(cfg.path_loss_ref_nlos_db) << '\n';
  out << "path_loss_exp_nlos = " << num(cfg.path_loss_exp_nlos) << '\n';
  out << "sim_time = " << num(cfg.sim_time_s) << '\n';
  out << "warmup_time = " << num(cfg.warmup_time_s) << '\n';
  out << "slot_duration = " << num(cfg.slot_duration_s) << '\n';
  out << "angle_step = " << num(cfg.angle_step_rad) << '\n';
  out << "hover_power = " << num(cfg.hover_power_w) << '\n';
  out << "move_power = " << format_move_power(cfg.move_power_w) << '\n';
  out << "user_speed_min = " << num(cfg.user_speed_min_mps) << '\n';
  out << "user_speed_max = " << num(cfg.user_speed_max_mps) << '\n';
  out << "policy = " << policy_name(cfg.policy) << '\n';
  out << "arrival_model = " << arrival_model_name(cfg.arrival_model) << '\n';
  out << "seed = " << cfg.seed << '\n';
  out << "runs = " << cfg.runs << '\n';
  return out.str();
}

}  // namespace dronecell
