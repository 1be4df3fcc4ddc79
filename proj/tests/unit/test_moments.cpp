#include <doctest.h>

#include "traceclt/moments/moments.hpp"

using namespace traceclt;
using namespace traceclt::moments;

namespace {

constexpr Group SO = Group::SpecialOrthogonal;
constexpr Group USp = Group::UnitarySymplectic;
constexpr Group U = Group::Unitary;

Rational m(Group g, std::map<int, int> a, std::map<int, int> b = {}) {
  return moment(MomentQuery{g, std::move(a), std::move(b)}).value;
}

// Brute-force E(sqrt(j) Z + s)^a from the Gaussian moment recursion
// E Z^k = (k-1) E Z^{k-2}, independent of the binomial formula in the library.
Rational gaussian_shift_moment(int j, int s, int a) {
  std::vector<Rational> z(a + 1, 0);
  z[0] = 1;
  for (int k = 2; k <= a; ++k) z[k] = Rational(k - 1) * z[k - 2];
  Rational total = 0;
  BigInt binom = 1;
  for (int k = 0; k <= a; ++k) {
    BigInt jp;
    mpz_ui_pow_ui(jp.get_mpz_t(), j, k / 2);
    // (sqrt j)^k is rational only for even k; odd k pair with z[k] = 0 anyway.
    const Rational term = k % 2 == 0 ? Rational(binom) * Rational(jp) * z[k] : Rational(0);
    BigInt sp = 1;
    for (int i = 0; i < a - k; ++i) sp *= s;
    total += term * Rational(sp);
    binom = binom * (a - k) / (k + 1);
  }
  return total;
}

}  // namespace

TEST_CASE("g_poly") {
  CHECK(g_poly(3, 2) == 3);
  CHECK(g_poly(3, 1) == 0);
  for (int j = 1; j <= 6; ++j) CHECK(g_poly(j, 0) == 1);
  CHECK(g_poly(2, 2) == 3);
  CHECK(g_poly(2, 1) == 1);
  CHECK(g_poly(1, 4) == 3);
  CHECK(g_poly(5, 4) == 75);
}

TEST_CASE("double factorial") {
  CHECK(double_factorial_odd(0) == 1);
  CHECK(double_factorial_odd(1) == 0);
  CHECK(double_factorial_odd(6) == 15);
  CHECK(double_factorial_odd(40) == BigInt("319830986772877770815625"));
}

TEST_CASE("normal_moment") {
  CHECK(normal_moment(5, 0, 2) == 5);
  CHECK(normal_moment(2, 1, 2) == 3);
  for (int s : {-1, 0, 1}) CHECK(normal_moment(7, s, 0) == 1);
  CHECK(normal_moment(2, -1, 3) == -7);
  for (int j = 1; j <= 8; ++j)
    for (int s : {-1, 0, 1})
      for (int a = 0; a <= 8; ++a) CHECK(normal_moment(j, s, a) == gaussian_shift_moment(j, s, a));
}

TEST_CASE("moment closed forms") {
  for (int j = 1; j <= 5; ++j) {
    CHECK(m(SO, {{2 * j, 1}}) == 1);
    CHECK(m(USp, {{2 * j, 1}}) == -1);
    CHECK(m(U, {{j, 1}}, {{j, 1}}) == j);
    CHECK(m(U, {{j, 2}}) == 0);
  }
  CHECK(m(SO, {{3, 2}}) == 3);
  CHECK(m(SO, {{1, 3}}) == 0);
  CHECK(m(U, {{1, 2}, {2, 1}}, {{1, 2}, {2, 1}}) == 4);  // 1^2 2! * 2^1 1!
  CHECK(m(USp, {{1, 2}}) == 1);
  CHECK(m(USp, {{2, 2}}) == 3);  // (-1)^2 g_2(2)
  CHECK(m(USp, {{2, 3}}) == -g_poly(2, 3));
  CHECK(m(SO, {}) == 1);
}

TEST_CASE("two moment expressions agree for small exponents") {
  for (int j = 1; j <= 8; ++j) {
    const int eta = j % 2 == 0 ? 1 : 0;
    for (int a = 0; a <= 6; ++a) {
      CHECK(m(SO, {{j, a}}) == normal_moment(j, eta, a));
      CHECK(m(USp, {{j, a}}) == normal_moment(j, -eta, a));
    }
  }
}

TEST_CASE("weights and validity thresholds") {
  const auto q = MomentQuery::from_monomial(U, Monomial({{2, false}, {1, true}, {1, true}}));
  CHECK(q.a.at(2) == 1);
  CHECK(q.b.at(1) == 2);
  CHECK(q.weight() == 4);
  CHECK(minimum_dimension(SO, 6) == 7);
  CHECK(minimum_dimension(USp, 6) == 3);
  CHECK(minimum_dimension(USp, 7) == 3);
  CHECK(minimum_dimension(U, 6) == 6);
  CHECK(minimum_dimension(U, 0) == 1);
  CHECK(moment(MomentQuery{SO, {{3, 2}}, {}}).min_n == 7);
}

TEST_CASE("expectation is linear over the term map") {
  const CoeffPoly n = CoeffPoly::n(1), t = CoeffPoly::t(1);
  for (int j : {2, 4, 6}) {
    const auto W = PowerSumPoly::letter(SO, j) - PowerSumPoly::constant(SO, 1);
    CHECK(expectation(W).value.is_zero());
    const auto V = PowerSumPoly::letter(USp, j) + PowerSumPoly::constant(USp, 1);
    CHECK(expectation(V).value.is_zero());
    CHECK(expectation(V * V).value == CoeffPoly(j, 1));
  }
  for (int j = 1; j <= 5; ++j) {
    const auto W = PowerSumPoly::letter(U, j) + PowerSumPoly::letter(U, j, true);
    CHECK(expectation(W * W).value == CoeffPoly(2 * j, 1));
    CHECK(expectation(W * W).min_n == 2 * j);
  }
  CHECK(expectation(PowerSumPoly::constant(SO, n * t)).value == n * t);
  CHECK(expectation(n * PowerSumPoly::letter(SO, 2)).value == n);
}

TEST_CASE("monomial enumeration") {
  const auto so = monomials_up_to_weight(SO, 4);
  CHECK(so.size() == 1 + 2 + 3 + 5);
  const auto u = monomials_up_to_weight(U, 2);
  // weight 1: p1, pbar1; weight 2: p2, p11, pbar2, pbar11, p1 pbar1
  CHECK(u.size() == 7);
  for (const auto& mono : monomials_up_to_weight(U, 6)) CHECK(mono.weight() <= 6);
}
