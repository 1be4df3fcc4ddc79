#include "traceclt/stein/target_forms.hpp"

namespace traceclt::stein::target {

namespace {

CoeffPoly q(long num, long den = 1) { return CoeffPoly(ratio(num, den)); }

CoeffPoly t_squared() { return CoeffPoly::monomial(1, 0, 2, 2); }

}  // namespace

CoeffPoly drift_rate(const StatisticSpec& spec) {
  const long j = spec.j;
  switch (spec.group) {
    case Group::SpecialOrthogonal:
      return (CoeffPoly::n() - q(1)) * q(j, 2);
    case Group::UnitarySymplectic:
      return (q(2) * CoeffPoly::n() + q(1)) * q(j, 2);
    case Group::Unitary:
      return CoeffPoly::n() * q(j);
  }
  return {};
}

PowerSumPoly remainder_scaled(const StatisticSpec& spec) {
  const Group g = spec.group;
  const int j = spec.j;
  const PowerSumPoly S = split_sum(g, j);
  const PowerSumPoly T = reflected_sum(g, j);
  const PowerSumPoly one = PowerSumPoly::constant(g, CoeffPoly(1));
  const CoeffPoly tj = CoeffPoly::t(1) * q(j);
  const bool even = j % 2 == 0;
  switch (g) {
    case Group::SpecialOrthogonal: {
      // t sqrt(j) [ -(n-1)/2 (even only) - S/2 + T/2 ]
      PowerSumPoly inner = q(-1, 2) * S + q(1, 2) * T;
      if (even) inner += ((CoeffPoly::n() - q(1)) * q(-1, 2)) * one;
      return tj * inner;
    }
    case Group::UnitarySymplectic: {
      // t sqrt(j) [ (2n+1)/2 (even only) - T/2 - S/2 ]
      PowerSumPoly inner = q(-1, 2) * T + q(-1, 2) * S;
      if (even) inner += ((q(2) * CoeffPoly::n() + q(1)) * q(1, 2)) * one;
      return tj * inner;
    }
    case Group::Unitary: {
      // t [ -sqrt(j/2) (S + Sbar) ], times sqrt(2j)
      return -tj * (S + split_sum(g, j, true));
    }
  }
  return PowerSumPoly(g);
}

PowerSumPoly square_increment(const StatisticSpec& spec) {
  const Group g = spec.group;
  const int j = spec.j;
  const PowerSumPoly one = PowerSumPoly::constant(g, CoeffPoly(1));
  const PowerSumPoly p2j = PowerSumPoly::letter(g, 2 * j);
  const CoeffPoly tj = CoeffPoly::t(1) * q(j);
  switch (g) {
    case Group::SpecialOrthogonal:
      return tj * (CoeffPoly::n() * one - p2j);
    case Group::UnitarySymplectic:
      return tj * ((q(2) * CoeffPoly::n()) * one - p2j);
    case Group::Unitary:
      return tj * ((q(2) * CoeffPoly::n()) * one - p2j - conjugate(p2j));
  }
  return PowerSumPoly(g);
}

CoeffPoly variance(const StatisticSpec& spec) {
  const long j3 = static_cast<long>(spec.j) * spec.j * spec.j;
  return t_squared() * q(spec.group == Group::Unitary ? 4 * j3 : 2 * j3);
}

CoeffPoly second_moment_increment(const StatisticSpec& spec) {
  const long j = spec.j;
  const CoeffPoly t = CoeffPoly::t(1);
  switch (spec.group) {
    case Group::SpecialOrthogonal:
      return t * q(j) * (CoeffPoly::n() - q(1));
    case Group::UnitarySymplectic:
      return t * q(j) * (q(2) * CoeffPoly::n() + q(1));
    case Group::Unitary:
      return t * q(2 * j) * CoeffPoly::n();
  }
  return {};
}

std::optional<CoeffPoly> r_second_moment_quoted(const StatisticSpec& spec) {
  if (spec.group != Group::Unitary) return std::nullopt;
  const long j = spec.j;
  const long j2 = j * j, j3 = j2 * j, j4 = j3 * j;
  if (j % 2 != 0) return t_squared() * q(j4 - j2, 6);
  return t_squared() * q(2 * j4 + 3 * j3 - 2 * j2, 12);
}

Rational r_second_moment_ceiling(const StatisticSpec& spec) {
  const long j = spec.j;
  const long j4 = j * j * j * j;
  if (spec.group == Group::Unitary) return ratio(j4, 4);
  return Rational(2 * j4);
}

}  // namespace traceclt::stein::target
