#include "traceclt/cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "traceclt/stein/statistic.hpp"

namespace traceclt::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <class T>
T parse_number(const std::string& key, const std::string& v) {
  T out{};
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size())
    throw ConfigError("bad value for " + key + ": '" + v + "'");
  return out;
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError("bad boolean for " + key + ": '" + v + "'");
}

std::string fmt_double(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

using Setter = std::function<void(ExperimentConfig&, const std::string&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table{
      {"group",
       [](ExperimentConfig& c, const std::string&, const std::string& v) {
         try {
           c.group = parse_group(v);
         } catch (const std::invalid_argument& e) {
           throw ConfigError(e.what());
         }
       }},
      {"n", [](auto& c, auto& k, auto& v) { c.n = parse_number<int>(k, v); }},
      {"j",
       [](auto& c, auto&, auto& v) {
         try {
           c.j = parse_int_list(v);
         } catch (const std::invalid_argument& e) {
           throw ConfigError(e.what());
         }
       }},
      {"jmax", [](auto& c, auto& k, auto& v) { c.j_max = parse_number<int>(k, v); }},
      {"jmax_limit", [](auto& c, auto& k, auto& v) { c.j_limit = parse_number<int>(k, v); }},
      {"samples", [](auto& c, auto& k, auto& v) { c.samples = parse_number<std::size_t>(k, v); }},
      {"seed", [](auto& c, auto& k, auto& v) { c.seed = parse_number<std::uint64_t>(k, v); }},
      {"out", [](auto& c, auto&, auto& v) { c.out = v; }},
      {"export_raw", [](auto& c, auto& k, auto& v) { c.export_raw = parse_bool(k, v); }},
      {"oracle_checks", [](auto& c, auto& k, auto& v) { c.oracle_checks = parse_bool(k, v); }},
      {"matrix_power_check",
       [](auto& c, auto& k, auto& v) { c.matrix_power_check = parse_bool(k, v); }},
      {"threads", [](auto& c, auto& k, auto& v) { c.threads = parse_number<unsigned>(k, v); }},
      {"ks_tolerance", [](auto& c, auto& k, auto& v) { c.tolerances.ks = parse_number<double>(k, v); }},
      {"moment_se_tolerance",
       [](auto& c, auto& k, auto& v) { c.tolerances.moment_se = parse_number<double>(k, v); }},
  };
  return table;
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size())
      throw std::invalid_argument("bad integer list '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

ExperimentConfig parse_config(const std::string& text, ExperimentConfig base) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool versioned = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "schema_version") {
      if (parse_number<int>(key, value) != kConfigSchemaVersion)
        throw ConfigError("unsupported config schema_version " + value);
      versioned = true;
      continue;
    }
    const auto it = setters().find(key);
    if (it == setters().end())
      throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    it->second(base, key, value);
  }
  if (!versioned) throw ConfigError("config is missing schema_version");
  return base;
}

ExperimentConfig load_config(const std::string& path, ExperimentConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), std::move(base));
}

std::string emit_config(const ExperimentConfig& c) {
  std::ostringstream os;
  os << "schema_version = " << kConfigSchemaVersion << "\n"
     << "group = " << group_tag(c.group) << "\n"
     << "n = " << c.n << "\n"
     << "j = " << join_ints(c.j) << "\n"
     << "jmax = " << c.j_max << "\n"
     << "jmax_limit = " << c.j_limit << "\n"
     << "samples = " << c.samples << "\n"
     << "seed = " << c.seed << "\n";
  if (!c.out.empty()) os << "out = " << c.out << "\n";
  os << "export_raw = " << (c.export_raw ? "true" : "false") << "\n"
     << "oracle_checks = " << (c.oracle_checks ? "true" : "false") << "\n"
     << "matrix_power_check = " << (c.matrix_power_check ? "true" : "false") << "\n"
     << "threads = " << c.threads << "\n"
     << "ks_tolerance = " << fmt_double(c.tolerances.ks) << "\n"
     << "moment_se_tolerance = " << fmt_double(c.tolerances.moment_se) << "\n";
  return os.str();
}

std::vector<std::string> validate(const ExperimentConfig& c) {
  if (c.n < 1) throw ConfigError("n must be at least 1");
  if (c.samples < 1) throw ConfigError("samples must be at least 1");
  if (c.j.empty()) throw ConfigError("j list is empty");
  if (c.j_max < 1) throw ConfigError("jmax must be at least 1");
  if (std::any_of(c.j.begin(), c.j.end(), [](int j) { return j < 1; }))
    throw ConfigError("every j must be at least 1");
  if (!(c.tolerances.ks > 0) || !(c.tolerances.moment_se > 0))
    throw ConfigError("tolerances must be positive");
  std::vector<std::string> warnings;
  for (int j : c.j) {
    const stein::StatisticSpec spec{c.group, j};
    if (c.n < stein::stein_threshold(spec))
      warnings.push_back("j = " + std::to_string(j) + " is outside the bound's range for " +
                         std::string(group_tag(c.group)) + " with n = " + std::to_string(c.n) +
                         "; the trivial bound 1 applies");
  }
  return warnings;
}

}  // namespace traceclt::cli
