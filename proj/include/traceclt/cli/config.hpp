#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "traceclt/symfunc/group.hpp"

namespace traceclt::cli {

inline constexpr int kConfigSchemaVersion = 1;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Tolerances {
  double ks = 0.02;
  /// Allowed |mean - oracle| measured in standard errors.
  double moment_se = 5.0;

  bool operator==(const Tolerances&) const = default;
};

struct ExperimentConfig {
  Group group = Group::Unitary;
  int n = 64;
  std::vector<int> j{1, 2, 4};
  int j_max = 12;
  /// Upper limit accepted for j_max by verify.
  int j_limit = 12;
  std::size_t samples = 100000;
  std::uint64_t seed = 1;
  std::string out;
  bool export_raw = false;
  /// Compare empirical moments of low-weight monomials against the oracle.
  bool oracle_checks = false;
  /// Recompute traces by matrix powers and the general eigensolver.
  bool matrix_power_check = false;
  unsigned threads = 0;
  Tolerances tolerances{};

  bool operator==(const ExperimentConfig&) const = default;
};

/// Parses "key = value" lines; '#' starts a comment. The file must declare
/// schema_version; unknown keys and malformed values raise ConfigError.
ExperimentConfig parse_config(const std::string& text, ExperimentConfig base = {});
ExperimentConfig load_config(const std::string& path, ExperimentConfig base = {});
std::string emit_config(const ExperimentConfig& c);

/// Throws ConfigError on a config that cannot run; returns warnings for
/// settings outside the bound's validity range.
std::vector<std::string> validate(const ExperimentConfig& c);

std::vector<int> parse_int_list(const std::string& text);
std::string join_ints(const std::vector<int>& v);

}  // namespace traceclt::cli
