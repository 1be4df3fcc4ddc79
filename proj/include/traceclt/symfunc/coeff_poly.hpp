#pragma once

#include <gmpxx.h>

#include <limits>
#include <map>
#include <string>
#include <utility>

namespace traceclt {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Exact polynomial in the symbolic dimension n and the heat time t,
/// Q[n][t] / (t^{order+1}). Terms above the truncation order are dropped as
/// soon as they are created; adding or multiplying two series keeps the
/// smaller of the two orders.
class CoeffPoly {
 public:
  static constexpr int kUntruncated = std::numeric_limits<int>::max();
  /// (degree in n, degree in t)
  using Key = std::pair<int, int>;
  using TermMap = std::map<Key, Rational>;

  CoeffPoly() = default;
  CoeffPoly(const Rational& c, int order = kUntruncated);  // NOLINT: implicit scalar lift
  CoeffPoly(long c, int order = kUntruncated);              // NOLINT

  static CoeffPoly monomial(const Rational& c, int n_degree, int t_degree,
                            int order = kUntruncated);
  static CoeffPoly n(int order = kUntruncated) { return monomial(1, 1, 0, order); }
  static CoeffPoly t(int order = kUntruncated) { return monomial(1, 0, 1, order); }

  int truncation_order() const { return order_; }
  CoeffPoly truncated(int order) const;

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True if the polynomial has no n or t dependence.
  bool is_constant() const;
  Rational coefficient(int n_degree, int t_degree) const;
  /// Coefficient of t^k as an (untruncated) polynomial in n.
  CoeffPoly t_coefficient(int k) const;
  int n_degree() const;
  int t_degree() const;

  CoeffPoly evaluate_n(const Rational& n_value) const;
  double evaluate(double n_value, double t_value = 0.0) const;

  CoeffPoly& operator+=(const CoeffPoly& other);
  CoeffPoly& operator-=(const CoeffPoly& other);
  CoeffPoly& operator*=(const CoeffPoly& other);
  CoeffPoly operator-() const;

  friend CoeffPoly operator+(CoeffPoly a, const CoeffPoly& b) { return a += b; }
  friend CoeffPoly operator-(CoeffPoly a, const CoeffPoly& b) { return a -= b; }
  friend CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b);
  friend bool operator==(const CoeffPoly& a, const CoeffPoly& b) { return a.terms_ == b.terms_; }

  /// Renders e.g. "3/2*n - 3/2 + n*t"; zero renders as "0".
  std::string to_string() const;

 private:
  void add_term(const Key& key, const Rational& c);

  TermMap terms_;
  int order_ = kUntruncated;
};

/// num/den in canonical form (gmpxx's two-argument constructor does not reduce).
Rational ratio(long num, long den);

std::string rational_to_string(const Rational& q);

}  // namespace traceclt
