#include "traceclt/stein/statistic.hpp"

#include <cmath>
#include <stdexcept>

#include "traceclt/moments/moments.hpp"

namespace traceclt::stein {

double ScaledStatistic::scale() const { return std::sqrt(scale_squared.get_d()); }

ScaledStatistic build_W(const StatisticSpec& spec, int truncation_order) {
  if (spec.j < 1) throw std::invalid_argument("build_W: j must be >= 1");
  const Group g = spec.group;
  const int j = spec.j;
  PowerSumPoly pj = PowerSumPoly::letter(g, j, false, truncation_order);
  PowerSumPoly one = PowerSumPoly::constant(g, CoeffPoly(1), truncation_order);
  switch (g) {
    case Group::SpecialOrthogonal:
      return {j % 2 == 0 ? pj - one : pj, Rational(j)};
    case Group::UnitarySymplectic:
      return {j % 2 == 0 ? pj + one : pj, Rational(j)};
    case Group::Unitary:
      return {pj + conjugate(pj), Rational(2 * j)};
  }
  throw std::logic_error("build_W: unknown group");
}

int stein_threshold(const StatisticSpec& spec) {
  return moments::minimum_dimension(spec.group, 4 * spec.j);
}

}  // namespace traceclt::stein
