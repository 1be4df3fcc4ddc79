#pragma once

#include "traceclt/stein/statistic.hpp"

namespace traceclt::stein {

/// A Haar expectation computed symbolically in n, together with the smallest
/// dimension parameter n for which every moment it used is guaranteed.
struct SymbolicValue {
  CoeffPoly value;
  int min_n = 1;
};

/// E[W'|M] = (1 - a) W + R(M), with a = rate * t. The remainder is stored in
/// the statistic's scaled units: R = remainder_scaled / sqrt(scale_squared).
struct Drift {
  CoeffPoly a;
  PowerSumPoly remainder_scaled;
  Rational scale_squared;
};

Drift conditional_drift(const StatisticSpec& spec);

/// E[(W'-W)^2 | M] = E[(W')^2|M] - 2W E[W'|M] + W^2, in units of W,
/// to first order in t.
PowerSumPoly conditional_square_increment(const StatisticSpec& spec);

/// Var(E[(W'-W)^2|M]); the value carries t^2 explicitly.
SymbolicValue variance_coefficient(const StatisticSpec& spec);

/// E(W'-W)^4 through order t, assembled from
/// 2E W^4 - 8E[W^3 E[W'|M]] + 6E[W^2 E[(W')^2|M]].
SymbolicValue fourth_moment_expansion(const StatisticSpec& spec);

/// Coefficient of t in fourth_moment_expansion, as a polynomial in n.
SymbolicValue fourth_moment_linear_coefficient(const StatisticSpec& spec);

/// E(W'-W)^2 through order t (carries t explicitly).
SymbolicValue second_moment_increment(const StatisticSpec& spec);

/// E[R^2] at order t^2 (carries t^2 explicitly).
SymbolicValue r_second_moment(const StatisticSpec& spec);

/// E(W) (in scaled units, so rational) and E(W^2).
struct Normalization {
  CoeffPoly mean_scaled;
  CoeffPoly second_moment;
  int min_n = 1;
};

Normalization normalization(const StatisticSpec& spec);

}  // namespace traceclt::stein
