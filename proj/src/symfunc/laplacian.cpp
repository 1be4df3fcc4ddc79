#include "traceclt/symfunc/laplacian.hpp"

namespace traceclt {

namespace {

using Poly = PowerSumPoly;

CoeffPoly q(long num, long den = 1) { return CoeffPoly(ratio(num, den)); }

CoeffPoly n_poly() { return CoeffPoly::n(); }

// Delta p_j, unconjugated.
Poly single(Group g, int j, int order) {
  const Poly pj = Poly::letter(g, j, false, order);
  const Poly S = split_sum(g, j, false, order);
  const Poly T = reflected_sum(g, j, false, order);
  const CoeffPoly jj(j);
  switch (g) {
    case Group::SpecialOrthogonal:
      // -(n-1)j/2 p_j - j/2 S + j/2 T
      return (n_poly() - q(1)) * q(-j, 2) * pj + q(-j, 2) * S + q(j, 2) * T;
    case Group::UnitarySymplectic:
      // -(2n+1)j/2 p_j - j/2 T - j/2 S
      return (q(2) * n_poly() + q(1)) * q(-j, 2) * pj + q(-j, 2) * T + q(-j, 2) * S;
    case Group::Unitary:
      // -nj p_j - j S
      return -(n_poly() * jj) * pj - jj * S;
  }
  return Poly(g, order);
}

// Delta p_{j,j}, unconjugated.
Poly square(Group g, int j, int order) {
  const Poly pj = Poly::letter(g, j, false, order);
  const Poly pjj = pj * pj;
  const Poly p2j = Poly::letter(g, 2 * j, false, order);
  const Poly S = split_sum(g, j, false, order);
  const Poly T = reflected_sum(g, j, false, order);
  const CoeffPoly jj(j);
  const CoeffPoly j2(static_cast<long>(j) * j);
  const Poly one = Poly::constant(g, CoeffPoly(1), order);
  switch (g) {
    case Group::SpecialOrthogonal:
      // -(n-1)j p_{j,j} - j^2 p_{2j} - j p_j S + j p_j T + j^2 n
      return -((n_poly() - q(1)) * jj) * pjj - j2 * p2j - jj * (pj * S) + jj * (pj * T) +
             (j2 * n_poly()) * one;
    case Group::UnitarySymplectic:
      // -(2n+1)j p_{j,j} - j^2 p_{2j} - j p_j T - j p_j S + 2 j^2 n
      return -((q(2) * n_poly() + q(1)) * jj) * pjj - j2 * p2j - jj * (pj * T) - jj * (pj * S) +
             (q(2) * j2 * n_poly()) * one;
    case Group::Unitary:
      // -2nj p_{j,j} - 2j^2 p_{2j} - 2j p_j S
      return -(q(2) * n_poly() * jj) * pjj - (q(2) * j2) * p2j - (q(2) * jj) * (pj * S);
  }
  return Poly(g, order);
}

// Delta (p_j pbar_j) on U(n).
Poly mixed(int j, int order) {
  const Group g = Group::Unitary;
  const Poly pj = Poly::letter(g, j, false, order);
  const Poly pbj = Poly::letter(g, j, true, order);
  const Poly S = split_sum(g, j, false, order);
  const Poly Sbar = split_sum(g, j, true, order);
  const CoeffPoly jj(j);
  const CoeffPoly j2(static_cast<long>(j) * j);
  // 2 j^2 n - 2nj p_j pbar_j - j p_j Sbar - j pbar_j S
  return (q(2) * j2 * n_poly()) * Poly::constant(g, CoeffPoly(1), order) -
         (q(2) * n_poly() * jj) * (pj * pbj) - jj * (pj * Sbar) - jj * (pbj * S);
}

}  // namespace

PowerSumPoly laplacian(const Monomial& m, Group group, int truncation_order) {
  const auto& ls = m.letters();
  if (ls.empty()) return Poly(group, truncation_order);
  auto conj_if = [&](Poly p, bool c) { return c ? conjugate(p) : p; };
  if (ls.size() == 1) return conj_if(single(group, ls[0].index, truncation_order), ls[0].conjugated);
  if (ls.size() == 2 && ls[0].index == ls[1].index) {
    if (ls[0].conjugated == ls[1].conjugated)
      return conj_if(square(group, ls[0].index, truncation_order), ls[0].conjugated);
    return mixed(ls[0].index, truncation_order);
  }
  throw OutsideLaplacianDomain("laplacian: monomial " + m.to_string() +
                               " is outside restricted Laplacian domain");
}

PowerSumPoly laplacian(const PowerSumPoly& f) {
  Poly out(f.group(), f.truncation_order());
  for (const auto& [m, c] : f.terms()) out += laplacian(m, f.group(), f.truncation_order()) * c;
  return out;
}

PowerSumPoly heat_first_order(const PowerSumPoly& f) {
  if (f.truncation_order() >= 2)
    throw UnsupportedOrder("heat_first_order: truncation order " +
                           std::to_string(f.truncation_order()) +
                           " requested; only the order-1 expansion is supported");
  if (f.truncation_order() < 1)
    throw UnsupportedOrder("heat_first_order: truncation order must be 1 to retain the t term");
  return f + laplacian(f) * CoeffPoly::t(1);
}

}  // namespace traceclt
