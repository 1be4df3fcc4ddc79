#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "traceclt/cli/config.hpp"
#include "traceclt/cli/report.hpp"

namespace traceclt::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailure = 1,
  kExitIntegrityFailure = 2,
  kExitIoFailure = 3,
  kExitUsage = 4,
};

/// Runs the lemma suite and writes the verify report to `out` (stdout when
/// empty). Exit 0 iff every record is an exact match.
int cmd_verify(Group g, int j_max, const std::string& out, std::ostream& log, int j_limit = 12);

int cmd_bound(Group g, int j, int n, std::ostream& log);

/// Monte Carlo pipeline for every j in the config; the report goes to
/// config.out or stdout. Optional raw export lands next to it as
/// <out>.samples.csv. Exit 1 when any row fails.
int cmd_sample(const ExperimentConfig& config, std::ostream& log);

/// Runs the pipeline without touching the filesystem.
ExperimentReport run_sample(const ExperimentConfig& config, std::ostream& log, bool& oracle_ok,
                            std::string* raw_export = nullptr);

int cmd_report_merge(const std::vector<std::string>& paths, const std::string& out, std::ostream& log);

}  // namespace traceclt::cli
