#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "traceclt/cli/config.hpp"
#include "traceclt/stein/suite.hpp"

namespace traceclt::cli {

inline constexpr int kReportSchemaVersion = 1;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExperimentRow {
  Group group = Group::Unitary;
  int n = 0;
  int j = 0;
  std::size_t N = 0;
  std::uint64_t seed = 0;
  double ks = 0.0;
  double bound_term1 = 0.0;
  double bound_term2 = 0.0;
  double bound_total = 0.0;
  double mean_W = 0.0;
  double var_W = 0.0;
  double oracle_mean = 0.0;
  double oracle_var = 0.0;
  bool pass = false;
  /// 22j/n; present for U(n) rows only.
  std::optional<double> reference;

  bool operator==(const ExperimentRow&) const = default;
};

/// pass flag as a function of the stored numbers: KS under the absolute
/// tolerance and under the bound, mean within moment_se standard errors.
bool row_passes(const ExperimentRow& r, const Tolerances& tol);

/// Delimited rows under a "# key=value" header block. Floating point columns
/// are written with 17 significant digits so a parse returns identical bits.
struct ExperimentReport {
  std::vector<std::pair<std::string, std::string>> header;
  std::vector<ExperimentRow> rows;

  std::optional<std::string> header_value(const std::string& key) const;
  bool operator==(const ExperimentReport&) const = default;
};

const std::vector<std::string>& report_columns();

/// Header for a single sample run: enough to rerun it.
std::vector<std::pair<std::string, std::string>> run_header(const ExperimentConfig& c);

std::string emit_report(const ExperimentReport& r);
ExperimentReport parse_report(const std::string& text);
ExperimentReport read_report(const std::string& path);

/// Concatenates in input order, keeps the first row per (group, n, j, seed)
/// and stable-sorts by that key. Reports must agree on schema and tolerances.
ExperimentReport merge_reports(const std::vector<ExperimentReport>& inputs);

/// Reconstructs the config that produced a single-run report.
ExperimentConfig config_from_header(const ExperimentReport& r);

/// Tab-separated lemma records with a header block.
std::string emit_verify_report(Group g, int j_max, const std::vector<stein::LemmaReport>& reports);

/// Writes to a sibling temporary file and renames it over the target.
void write_atomic(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

std::string format_double(double x);

}  // namespace traceclt::cli
