#pragma once

// Sweep configuration: a flat key = value file, overridable by flags.
//
//   # comment
//   model  = bgk            # bgk | bgk-b | lindhard | mermin
//   x      = 0              # scalar, or min:max:steps
//   y      = 0,0.005,0.01   # comma-separated list
//   q      = 1.5:2.5:2001   # min:max:steps, or scalar when x is a range
//   xp     = 1
//   output = fig1           # path stem; .csv / .svg appended per format
//   format = both           # csv | svg | both
//
// Exactly one of x and q must be a range; it is the sweep axis.

#include <charconv>
#include <cstddef>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace qplasma::cli {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SweepModel { bgk, bgk_b, lindhard, mermin };
enum class OutputFormat { csv, svg, both };

struct Range {
  double min = 0.0;
  double max = 1.0;
  std::size_t steps = 2;

  std::vector<double> values() const {
    std::vector<double> v(steps);
    for (std::size_t i = 0; i < steps; ++i)
      v[i] = i + 1 == steps ? max : min + (max - min) * static_cast<double>(i) / static_cast<double>(steps - 1);
    return v;
  }
};

using Axis = std::variant<double, Range>;

struct SweepConfig {
  SweepModel model = SweepModel::bgk;
  Axis x = 0.0;
  std::vector<double> y{0.0};
  Axis q = Range{1.5, 2.5, 501};
  double xp = 1.0;
  std::string output;
  OutputFormat format = OutputFormat::csv;
};

using KeyValues = std::map<std::string, std::string>;

namespace detail {

inline std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

inline double parse_double(std::string_view text, std::string_view key) {
  const std::string s = trim(text);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw ConfigError("invalid number '" + s + "' for key '" + std::string(key) + "'");
  return value;
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace detail

inline Axis parse_axis(std::string_view text, std::string_view key) {
  const auto parts = detail::split(text, ':');
  if (parts.size() == 1) return detail::parse_double(parts[0], key);
  if (parts.size() != 3) throw ConfigError("range for '" + std::string(key) + "' must be min:max:steps");
  Range r;
  r.min = detail::parse_double(parts[0], key);
  r.max = detail::parse_double(parts[1], key);
  const double steps = detail::parse_double(parts[2], key);
  if (steps < 2.0 || steps != static_cast<double>(static_cast<std::size_t>(steps)))
    throw ConfigError("range steps for '" + std::string(key) + "' must be an integer >= 2");
  r.steps = static_cast<std::size_t>(steps);
  if (!(r.max > r.min)) throw ConfigError("range for '" + std::string(key) + "' needs min < max");
  return r;
}

inline std::vector<double> parse_list(std::string_view text, std::string_view key) {
  std::vector<double> values;
  for (const auto& part : detail::split(text, ',')) values.push_back(detail::parse_double(part, key));
  return values;
}

inline SweepModel parse_model(std::string_view s) {
  if (s == "bgk") return SweepModel::bgk;
  if (s == "bgk-b") return SweepModel::bgk_b;
  if (s == "lindhard") return SweepModel::lindhard;
  if (s == "mermin") return SweepModel::mermin;
  throw ConfigError("unknown model '" + std::string(s) + "'");
}

inline std::string_view to_string(SweepModel m) {
  switch (m) {
    case SweepModel::bgk: return "bgk";
    case SweepModel::bgk_b: return "bgk-b";
    case SweepModel::lindhard: return "lindhard";
    case SweepModel::mermin: return "mermin";
  }
  return "unknown";
}

inline OutputFormat parse_format(std::string_view s) {
  if (s == "csv") return OutputFormat::csv;
  if (s == "svg") return OutputFormat::svg;
  if (s == "both") return OutputFormat::both;
  throw ConfigError("unknown format '" + std::string(s) + "'");
}

inline KeyValues parse_key_values(std::istream& in, std::string_view origin = "config") {
  KeyValues kv;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string content = detail::trim(line);
    if (content.empty()) continue;
    const auto eq = content.find('=');
    if (eq == std::string::npos)
      throw ConfigError(std::string(origin) + ":" + std::to_string(line_no) + ": expected key = value");
    const std::string key = detail::trim(std::string_view(content).substr(0, eq));
    if (key.empty()) throw ConfigError(std::string(origin) + ":" + std::to_string(line_no) + ": empty key");
    kv[key] = detail::trim(std::string_view(content).substr(eq + 1));
  }
  return kv;
}

inline KeyValues load_key_values(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  return parse_key_values(in, path);
}

/// Builds a config from key/value pairs; unknown keys are rejected.
inline SweepConfig build_sweep_config(const KeyValues& kv) {
  SweepConfig cfg;
  for (const auto& [key, value] : kv) {
    if (key == "model") cfg.model = parse_model(value);
    else if (key == "x") cfg.x = parse_axis(value, key);
    else if (key == "y") cfg.y = parse_list(value, key);
    else if (key == "q") cfg.q = parse_axis(value, key);
    else if (key == "xp") cfg.xp = detail::parse_double(value, key);
    else if (key == "output") cfg.output = value;
    else if (key == "format") cfg.format = parse_format(value);
    else throw ConfigError("unknown key '" + key + "'");
  }
  const bool x_range = std::holds_alternative<Range>(cfg.x);
  const bool q_range = std::holds_alternative<Range>(cfg.q);
  if (x_range == q_range) throw ConfigError("exactly one of x and q must be a range");
  if (cfg.y.empty()) throw ConfigError("y list is empty");
  for (double y : cfg.y)
    if (y < 0.0) throw ConfigError("y values must be >= 0");
  if (cfg.xp < 0.0) throw ConfigError("xp must be >= 0");
  if (cfg.format != OutputFormat::csv && cfg.output.empty()) throw ConfigError("svg output needs an output path");
  return cfg;
}

}  // namespace qplasma::cli
