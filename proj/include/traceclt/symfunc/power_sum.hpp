#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "traceclt/symfunc/coeff_poly.hpp"
#include "traceclt/symfunc/group.hpp"

namespace traceclt {

/// One trace factor: p_k = Tr(M^k), or its complex conjugate on U(n).
struct PowerLetter {
  int index = 1;
  bool conjugated = false;

  friend auto operator<=>(const PowerLetter&, const PowerLetter&) = default;
};

/// A product of normalized letters, kept sorted so equality is syntactic.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<PowerLetter> letters);

  const std::vector<PowerLetter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  /// Sum of indices; the quantity moment formulas are valid against.
  int weight() const;

  Monomial operator*(const Monomial& other) const;
  Monomial conjugated() const;

  /// "1", "p_3", "p_{1,2}", "p_{2}*pbar_{1,1}"
  std::string to_string() const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<PowerLetter> letters_;
};

class TruncationMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class UnsupportedOperation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Polynomial in power-sum letters with coefficients in Q[n][t]/(t^{order+1}).
/// Every stored monomial is normalized for the group and no stored
/// coefficient is zero.
class PowerSumPoly {
 public:
  using TermMap = std::map<Monomial, CoeffPoly>;

  explicit PowerSumPoly(Group group, int truncation_order = 1);

  static PowerSumPoly constant(Group group, const CoeffPoly& c, int truncation_order = 1);
  /// Normalized single letter; index may be any integer.
  static PowerSumPoly letter(Group group, int index, bool conjugated = false,
                             int truncation_order = 1);
  /// Normalized product of raw letters times a coefficient.
  static PowerSumPoly product(Group group, const std::vector<PowerLetter>& raw,
                              const CoeffPoly& c = CoeffPoly(1), int truncation_order = 1);

  Group group() const { return group_; }
  int truncation_order() const { return order_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  CoeffPoly coefficient(const Monomial& m) const;

  /// Coefficient of t^k, returned as a t-free polynomial at the given order.
  PowerSumPoly t_coefficient(int k, int result_order = 0) const;
  /// Same polynomial re-read at a lower (or equal) truncation order.
  PowerSumPoly truncated(int order) const;

  PowerSumPoly& operator+=(const PowerSumPoly& other);
  PowerSumPoly& operator-=(const PowerSumPoly& other);
  PowerSumPoly& operator*=(const PowerSumPoly& other);
  PowerSumPoly& operator*=(const CoeffPoly& c);
  PowerSumPoly operator-() const;

  friend PowerSumPoly operator+(PowerSumPoly a, const PowerSumPoly& b) { return a += b; }
  friend PowerSumPoly operator-(PowerSumPoly a, const PowerSumPoly& b) { return a -= b; }
  friend PowerSumPoly operator*(const PowerSumPoly& a, const PowerSumPoly& b);
  friend PowerSumPoly operator*(PowerSumPoly a, const CoeffPoly& c) { return a *= c; }
  friend PowerSumPoly operator*(const CoeffPoly& c, PowerSumPoly a) { return a *= c; }
  friend bool operator==(const PowerSumPoly& a, const PowerSumPoly& b) {
    return a.group_ == b.group_ && a.terms_ == b.terms_;
  }

  /// Adds c * m where m is already normalized for this group.
  void add_term(const Monomial& m, const CoeffPoly& c);

  std::string to_string() const;

 private:
  void require_compatible(const PowerSumPoly& other, const char* op) const;

  Group group_;
  int order_;
  TermMap terms_;
};

/// p_0 becomes the trace of the identity, p_{-k} becomes p_k (SO, USp) or
/// pbar_k (U). On SO/USp the conjugation flag is dropped since traces are real.
PowerSumPoly normalize(PowerLetter raw, Group group, int truncation_order = 1);

PowerSumPoly add(const PowerSumPoly& f, const PowerSumPoly& g);
PowerSumPoly mul(const PowerSumPoly& f, const PowerSumPoly& g);
/// Complex conjugation of a U(n) polynomial; throws UnsupportedOperation otherwise.
PowerSumPoly conjugate(const PowerSumPoly& f);
/// Evaluates every coefficient at n = n_value; throws std::invalid_argument if n_value < 1.
PowerSumPoly substitute_n(const PowerSumPoly& f, int n_value);

/// Sum over 1 <= l < j of p_l p_{j-l} (ordered, so l and j-l both appear).
PowerSumPoly split_sum(Group group, int j, bool conjugated = false, int truncation_order = 1);
/// Sum over 1 <= l < j of p_{2l-j}, normalized (p_0 and negative indices reflected).
PowerSumPoly reflected_sum(Group group, int j, bool conjugated = false, int truncation_order = 1);

}  // namespace traceclt
