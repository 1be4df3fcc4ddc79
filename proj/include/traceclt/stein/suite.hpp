#pragma once

#include <string>
#include <vector>

#include "traceclt/stein/statistic.hpp"

namespace traceclt::stein {

enum class LemmaStatus { ExactMatch, Residual };

/// Outcome of one identity check: computed minus closed form. The status is
/// ExactMatch exactly when the residual is the zero polynomial.
struct LemmaReport {
  std::string lemma;
  Group group = Group::Unitary;
  int j = 1;
  LemmaStatus status = LemmaStatus::ExactMatch;
  PowerSumPoly residual{Group::Unitary};
  /// Smallest n for which the moments used are guaranteed (1 if none used).
  int min_n = 1;
  std::string detail;
};

/// Lemma ids in suite order.
inline const std::vector<std::string>& lemma_ids() {
  static const std::vector<std::string> ids{"cond1", "cond2", "var", "low1", "low4", "boundR"};
  return ids;
}

LemmaReport check_drift(const StatisticSpec& spec);
LemmaReport check_square_increment(const StatisticSpec& spec);
LemmaReport check_variance(const StatisticSpec& spec);
LemmaReport check_second_moment(const StatisticSpec& spec);
LemmaReport check_fourth_moment(const StatisticSpec& spec);
LemmaReport check_remainder(const StatisticSpec& spec);

/// Runs every check for j = 1..j_max; throws std::invalid_argument if j_max < 1.
std::vector<LemmaReport> run_lemma_suite(Group group, int j_max);

bool all_exact(const std::vector<LemmaReport>& reports);

}  // namespace traceclt::stein
