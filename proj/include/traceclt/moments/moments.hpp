#pragma once

#include <map>
#include <string>
#include <vector>

#include "traceclt/symfunc/power_sum.hpp"

namespace traceclt::moments {

/// Exponents of a trace monomial: prod_j p_j^{a_j} * pbar_j^{b_j}.
/// b stays empty on SO(n) and USp(2n).
struct MomentQuery {
  Group group = Group::Unitary;
  std::map<int, int> a;
  std::map<int, int> b;

  static MomentQuery from_monomial(Group group, const Monomial& m);
  /// sum_j j * (a_j + b_j)
  int weight() const;
};

/// Haar expectation of a monomial. The value is a constant (independent of n)
/// once n is at least min_n; below that the closed form is not guaranteed.
struct MomentResult {
  Rational value;
  int weight = 0;
  int min_n = 1;
};

/// Smallest dimension parameter n for which a monomial of this weight is
/// covered: SO(n) needs weight <= n-1, USp(2n) weight <= 2n+1, U(n) weight <= n.
int minimum_dimension(Group group, int weight);

/// (a-1)(a-3)...1 for even a, 0 for odd a, 1 for a = 0.
BigInt double_factorial_odd(int a);

/// g_j(a): j^{a/2}(a-1)!! (odd j, even a), 0 (odd j, odd a),
/// 1 + sum_{k>=1} C(a,2k) j^k (2k-1)!! (even j).
Rational g_poly(int j, int a);

/// E(sqrt(j) Z + shift)^a for standard normal Z, by binomial expansion.
Rational normal_moment(int j, int shift, int a);

MomentResult moment(const MomentQuery& q);

struct Expectation {
  CoeffPoly value;
  int max_weight = 0;
  int min_n = 1;
};

/// Every nonconstant monomial p_lambda (times pbar_mu on U) of total weight
/// at most max_weight, in a fixed order.
std::vector<Monomial> monomials_up_to_weight(Group group, int max_weight);

/// Linear extension of moment() over a polynomial's term map.
Expectation expectation(const PowerSumPoly& f);

}  // namespace traceclt::moments
