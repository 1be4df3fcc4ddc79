#include "traceclt/stein/lemmas.hpp"

#include <algorithm>

#include "traceclt/moments/moments.hpp"
#include "traceclt/symfunc/laplacian.hpp"

namespace traceclt::stein {

namespace {

CoeffPoly inverse(const Rational& r) { return CoeffPoly(Rational(1) / r); }

// Lifts a t-free polynomial in n to c * t^k at truncation order k.
CoeffPoly times_t_power(const CoeffPoly& c, int k) {
  return c.t_coefficient(0) * CoeffPoly::monomial(1, 0, k, k);
}

}  // namespace

Drift conditional_drift(const StatisticSpec& spec) {
  const ScaledStatistic w = build_W(spec);
  const PowerSumPoly heat = heat_first_order(w.scaled);
  // The multiple of W is read off the coefficient of p_j in Delta(scaled W).
  const Monomial leading({PowerLetter{spec.j, false}});
  const CoeffPoly rate = -heat.coefficient(leading).t_coefficient(1);
  const CoeffPoly a = rate * CoeffPoly::t(1);
  PowerSumPoly remainder = heat - w.scaled + w.scaled * a;
  return {a, remainder, w.scale_squared};
}

PowerSumPoly conditional_square_increment(const StatisticSpec& spec) {
  const ScaledStatistic w = build_W(spec);
  const PowerSumPoly& V = w.scaled;
  const PowerSumPoly V2 = V * V;
  PowerSumPoly x = heat_first_order(V2) - CoeffPoly(2) * (V * heat_first_order(V)) + V2;
  return x * inverse(w.scale_squared);
}

SymbolicValue variance_coefficient(const StatisticSpec& spec) {
  const PowerSumPoly y = conditional_square_increment(spec).t_coefficient(1);
  const auto first = moments::expectation(y);
  const auto second = moments::expectation(y * y);
  CoeffPoly var = second.value - first.value * first.value;
  return {times_t_power(var, 2), std::max(first.min_n, second.min_n)};
}

SymbolicValue fourth_moment_expansion(const StatisticSpec& spec) {
  const ScaledStatistic w = build_W(spec);
  const PowerSumPoly& V = w.scaled;
  const PowerSumPoly V2 = V * V;
  const PowerSumPoly V3 = V2 * V;
  PowerSumPoly f = CoeffPoly(2) * (V2 * V2) - CoeffPoly(8) * (V3 * heat_first_order(V)) +
                   CoeffPoly(6) * (V2 * heat_first_order(V2));
  const auto e = moments::expectation(f);
  return {e.value * inverse(w.scale_squared * w.scale_squared), e.min_n};
}

SymbolicValue fourth_moment_linear_coefficient(const StatisticSpec& spec) {
  SymbolicValue full = fourth_moment_expansion(spec);
  return {full.value.t_coefficient(1), full.min_n};
}

SymbolicValue second_moment_increment(const StatisticSpec& spec) {
  const auto e = moments::expectation(conditional_square_increment(spec));
  return {e.value, e.min_n};
}

SymbolicValue r_second_moment(const StatisticSpec& spec) {
  const Drift d = conditional_drift(spec);
  const PowerSumPoly r1 = d.remainder_scaled.t_coefficient(1);
  const auto e = moments::expectation(r1 * r1);
  return {times_t_power(e.value * inverse(d.scale_squared), 2), e.min_n};
}

Normalization normalization(const StatisticSpec& spec) {
  const ScaledStatistic w = build_W(spec, 0);
  const auto m1 = moments::expectation(w.scaled);
  const auto m2 = moments::expectation(w.scaled * w.scaled);
  return {m1.value, m2.value * inverse(w.scale_squared), std::max(m1.min_n, m2.min_n)};
}

}  // namespace traceclt::stein
