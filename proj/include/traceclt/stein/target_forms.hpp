#pragma once

#include <optional>

#include "traceclt/stein/statistic.hpp"

/// Closed forms of the conditional-moment identities, written out term by
/// term for concrete j. These are the targets the engine's computed
/// quantities are compared against; they never call the Laplacian.
namespace traceclt::stein::target {

/// Coefficient c in a = c*t: (n-1)j/2, (2n+1)j/2, nj.
CoeffPoly drift_rate(const StatisticSpec& spec);

/// The remainder R(M) of E[W'|M] = (1-a)W + R, scaled by sqrt(scale^2)
/// like the statistic, at truncation order 1 (carries the factor t).
PowerSumPoly remainder_scaled(const StatisticSpec& spec);

/// E[(W'-W)^2 | M] in units of W: tj(n - p_2j), tj(2n - p_2j),
/// tj(2n - p_2j - pbar_2j).
PowerSumPoly square_increment(const StatisticSpec& spec);

/// Var(E[(W'-W)^2|M]) to order t^2: 2j^3 t^2 (SO, USp), 4j^3 t^2 (U).
CoeffPoly variance(const StatisticSpec& spec);

/// E(W'-W)^2 to order t: j(n-1)t, j(2n+1)t, 2jn t.
CoeffPoly second_moment_increment(const StatisticSpec& spec);

/// Quoted exact E[R^2] for U(n): (j^4-j^2)/6 t^2 for odd j and
/// (2j^4+3j^3-2j^2)/12 t^2 for even j. Empty for SO/USp.
std::optional<CoeffPoly> r_second_moment_quoted(const StatisticSpec& spec);

/// Upper bound claimed for the t^2 coefficient of E[R^2]: j^4/4 for U(n);
/// for SO/USp, 2j^4 as a concrete reading of the O(j^4) claim.
Rational r_second_moment_ceiling(const StatisticSpec& spec);

}  // namespace traceclt::stein::target
