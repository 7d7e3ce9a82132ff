#include "wormsim/scenario.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <istream>
#include <sstream>

#include <fmt/format.h>

namespace wsn {

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

template <class T>
T parse_number(std::string_view text, int line, std::string_view key) {
  std::string t = trim(text);
  T value{};
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty()) {
    throw ParseError(line, fmt::format("`{}`: cannot parse `{}` as a number", key, t));
  }
  return value;
}

bool parse_bool(std::string_view text, int line, std::string_view key) {
  std::string t = trim(text);
  if (t == "true" || t == "1" || t == "yes" || t == "on") return true;
  if (t == "false" || t == "0" || t == "no" || t == "off") return false;
  throw ParseError(line, fmt::format("`{}`: expected true/false, got `{}`", key, t));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

// `[{a, b, mode, delay}, {a, b, mode}]`; delay is optional.
std::vector<WormholeLink> parse_wormholes(std::string_view text, int line) {
  std::string t = trim(text);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') {
    throw ParseError(line, "`wormholes`: expected `[{a, b, mode, delay}, ...]`");
  }
  std::vector<WormholeLink> out;
  std::string_view body(t);
  body = body.substr(1, body.size() - 2);
  std::size_t pos = 0;
  while (true) {
    auto open = body.find('{', pos);
    if (open == std::string_view::npos) {
      if (!trim(body.substr(pos)).empty() && trim(body.substr(pos)) != ",") {
        throw ParseError(line, "`wormholes`: stray text outside braces");
      }
      break;
    }
    auto close = body.find('}', open);
    if (close == std::string_view::npos) throw ParseError(line, "`wormholes`: unterminated `{`");
    auto fields = split(body.substr(open + 1, close - open - 1), ',');
    if (fields.size() < 3 || fields.size() > 4) {
      throw ParseError(line, "`wormholes`: each entry needs a, b, mode[, delay]");
    }
    WormholeLink link;
    link.end_a = node(parse_number<std::uint32_t>(fields[0], line, "wormholes"));
    link.end_b = node(parse_number<std::uint32_t>(fields[1], line, "wormholes"));
    auto mode = parse_attack_mode(fields[2]);
    if (!mode) throw ParseError(line, fmt::format("`wormholes`: unknown mode `{}`", fields[2]));
    link.mode = *mode;
    if (fields.size() == 4) link.tunnel_delay = parse_number<double>(fields[3], line, "wormholes");
    out.push_back(link);
    pos = close + 1;
  }
  return out;
}

}  // namespace

void apply_setting(ScenarioConfig& cfg, const std::string& key, const std::string& value, int line) {
  if (key == "seed") {
    cfg.seed = parse_number<std::uint64_t>(value, line, key);
  } else if (key == "node_count") {
    cfg.node_count = parse_number<std::size_t>(value, line, key);
  } else if (key == "area_width") {
    cfg.area_width = parse_number<double>(value, line, key);
  } else if (key == "area_height") {
    cfg.area_height = parse_number<double>(value, line, key);
  } else if (key == "range") {
    cfg.range = parse_number<double>(value, line, key);
  } else if (key == "hop_delay") {
    cfg.hop_delay = parse_number<double>(value, line, key);
  } else if (key == "ack_window") {
    cfg.ack_window = parse_number<double>(value, line, key);
  } else if (key == "sim_time_limit") {
    cfg.sim_time_limit = parse_number<double>(value, line, key);
  } else if (key == "tx_cost") {
    cfg.tx_cost = parse_number<double>(value, line, key);
  } else if (key == "rx_cost") {
    cfg.rx_cost = parse_number<double>(value, line, key);
  } else if (key == "loss_probability") {
    cfg.loss_probability = parse_number<double>(value, line, key);
  } else if (key == "prevention") {
    cfg.prevention_enabled = parse_bool(value, line, key);
  } else if (key == "source") {
    cfg.source = node(parse_number<std::uint32_t>(value, line, key));
  } else if (key == "destination") {
    cfg.destination = node(parse_number<std::uint32_t>(value, line, key));
  } else if (key == "wormholes") {
    cfg.wormholes = parse_wormholes(value, line);
  } else if (key == "wormhole_count") {
    cfg.wormhole_count = parse_number<std::size_t>(value, line, key);
  } else if (key == "wormhole_mode") {
    auto mode = parse_attack_mode(trim(value));
    if (!mode) throw ParseError(line, fmt::format("`wormhole_mode`: unknown mode `{}`", trim(value)));
    cfg.wormhole_mode = *mode;
  } else if (key == "tunnel_delay") {
    cfg.tunnel_delay = parse_number<double>(value, line, key);
  } else if (key == "node") {
    std::istringstream ls(value);
    std::uint32_t id = 0;
    double x = 0, y = 0;
    std::string extra;
    if (!(ls >> id >> x >> y) || (ls >> extra)) throw ParseError(line, "`node`: expected `id x y`");
    cfg.nodes.emplace_back(node(id), Position{x, y});
  } else if (key == "topology_file") {
    cfg.topology_file = trim(value);
  } else {
    throw ParseError(line, fmt::format("unknown key `{}`", key));
  }
}

void validate(const ScenarioConfig& cfg) {
  auto positive = [](double v, const char* field) {
    if (!(v > 0.0) || !std::isfinite(v)) throw ConfigError(field, fmt::format("must be positive, got {}", v));
  };
  positive(cfg.range, "range");
  positive(cfg.area_width, "area_width");
  positive(cfg.area_height, "area_height");
  positive(cfg.hop_delay, "hop_delay");
  positive(cfg.ack_window, "ack_window");
  positive(cfg.sim_time_limit, "sim_time_limit");
  positive(cfg.tx_cost, "tx_cost");
  positive(cfg.rx_cost, "rx_cost");
  if (cfg.nodes.empty() && cfg.topology_file.empty() && cfg.node_count < 2) {
    throw ConfigError("node_count", "need at least 2 nodes");
  }
  if (!(cfg.loss_probability >= 0.0 && cfg.loss_probability < 1.0)) {
    throw ConfigError("loss_probability", "must be in [0, 1)");
  }
  if (!(cfg.tunnel_delay >= 0.0)) throw ConfigError("tunnel_delay", "must be non-negative");
  if (cfg.wormholes) {
    for (const auto& l : *cfg.wormholes) {
      if (!(l.tunnel_delay >= 0.0)) throw ConfigError("wormholes", "tunnel delay must be non-negative");
      if (l.end_a == l.end_b) throw ConfigError("wormholes", "endpoints must differ");
    }
  }
  if (cfg.source && cfg.destination && *cfg.source == *cfg.destination) {
    throw ConfigError("destination", "must differ from source");
  }
  NodeSet seen;
  for (const auto& [id, pos] : cfg.nodes) {
    if (!seen.insert(id).second) throw ConfigError("node", fmt::format("duplicate id {}", raw(id)));
    if (pos.x < 0 || pos.y < 0) throw ConfigError("node", fmt::format("negative coordinate for {}", raw(id)));
  }
}

ScenarioConfig parse_scenario(std::istream& is) {
  ScenarioConfig cfg;
  std::string raw_line;
  int lineno = 0;
  while (std::getline(is, raw_line)) {
    ++lineno;
    if (auto hash = raw_line.find('#'); hash != std::string::npos) raw_line.erase(hash);
    std::string line = trim(raw_line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(lineno, "expected `key = value`");
    apply_setting(cfg, trim(line.substr(0, eq)), line.substr(eq + 1), lineno);
  }
  validate(cfg);
  return cfg;
}

ScenarioConfig load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open scenario file " + path);
  ScenarioConfig cfg = parse_scenario(in);
  std::filesystem::path topo(cfg.topology_file);
  if (!cfg.topology_file.empty() && topo.is_relative()) {
    cfg.topology_file = (std::filesystem::path(path).parent_path() / topo).string();
  }
  return cfg;
}

std::string dump_scenario(const ScenarioConfig& cfg) {
  std::string out;
  auto put = [&out](std::string_view k, const auto& v) { out += fmt::format("{} = {}\n", k, v); };
  put("seed", cfg.seed);
  put("node_count", cfg.node_count);
  put("area_width", cfg.area_width);
  put("area_height", cfg.area_height);
  put("range", cfg.range);
  put("hop_delay", cfg.hop_delay);
  put("ack_window", cfg.ack_window);
  put("sim_time_limit", cfg.sim_time_limit);
  put("tx_cost", cfg.tx_cost);
  put("rx_cost", cfg.rx_cost);
  put("loss_probability", cfg.loss_probability);
  put("prevention", cfg.prevention_enabled ? "true" : "false");
  if (cfg.source) put("source", raw(*cfg.source));
  if (cfg.destination) put("destination", raw(*cfg.destination));
  if (cfg.wormholes) {
    std::string list;
    for (const auto& l : *cfg.wormholes) {
      if (!list.empty()) list += ", ";
      list += fmt::format("{{{}, {}, {}, {}}}", raw(l.end_a), raw(l.end_b), to_string(l.mode), l.tunnel_delay);
    }
    put("wormholes", "[" + list + "]");
  }
  put("wormhole_count", cfg.wormhole_count);
  put("wormhole_mode", to_string(cfg.wormhole_mode));
  put("tunnel_delay", cfg.tunnel_delay);
  for (const auto& [id, p] : cfg.nodes) out += fmt::format("node = {} {} {}\n", raw(id), p.x, p.y);
  if (!cfg.topology_file.empty()) put("topology_file", cfg.topology_file);
  return out;
}

}  // namespace wsn
