#pragma once

#include "traceclt/symfunc/power_sum.hpp"

namespace traceclt::stein {

struct StatisticSpec {
  Group group = Group::Unitary;
  int j = 1;
};

/// The normalized trace statistic, stored as W = scaled / sqrt(scale_squared)
/// so that every coefficient stays in Q[n]:
///   SO:  p_j (j odd), p_j - 1 (j even), scale^2 = j
///   USp: p_j (j odd), p_j + 1 (j even), scale^2 = j
///   U:   p_j + pbar_j,                 scale^2 = 2j
struct ScaledStatistic {
  PowerSumPoly scaled;
  Rational scale_squared;

  double scale() const;
};

/// Throws std::invalid_argument for j < 1.
ScaledStatistic build_W(const StatisticSpec& spec, int truncation_order = 1);

/// Parameter n at which the fourth-order identities are guaranteed
/// (4j <= n-1, 4j <= 2n+1, 4j <= n).
int stein_threshold(const StatisticSpec& spec);

}  // namespace traceclt::stein
