#pragma once

#include <optional>
#include <string>

#include "traceclt/stein/statistic.hpp"

namespace traceclt::stein {

/// sqrt(radicand) / denominator(n): the exact t -> 0 limit of one error term.
struct SymbolicTerm {
  Rational radicand;
  CoeffPoly denominator;

  double value(int n) const;
  /// Exact equality of the two square-root expressions as functions of n.
  bool same_as(const SymbolicTerm& other) const;
  std::string to_string() const;
};

/// Kolmogorov-distance bound from the exchangeable-pair theorem in the
/// t -> 0 limit: term1 = 6 sqrt(Var coefficient)/rate, term2 = 19 sqrt(E R^2
/// coefficient)/rate, term3 -> 0. When 4j exceeds the group threshold the
/// trivial bound 1 is reported.
struct SteinBound {
  Group group = Group::Unitary;
  int j = 1;
  int n = 1;
  bool trivial = false;
  double term1 = 0.0;
  double term2 = 0.0;
  double term3 = 0.0;
  double total = 1.0;
  /// total * n / j: the constant C in "distance <= C j / n" at this (j, n).
  double explicit_constant = 0.0;
  SymbolicTerm term1_symbolic;
  SymbolicTerm term2_symbolic;
  /// U(n) only: 19j/(2n), the term2 obtained from the quoted j^4/4 majorant.
  std::optional<double> quoted_term2;
  /// U(n) only: 22j/n.
  std::optional<double> reference;
};

SymbolicTerm term1_symbolic(const StatisticSpec& spec);
SymbolicTerm term2_symbolic(const StatisticSpec& spec);

SteinBound stein_bound(const StatisticSpec& spec, int n_value);

/// Closed forms of the U(n) terms for any j: term1 = 12 sqrt(j)/n and
/// term2 = 19 sqrt((j^2-1)/3)/n, from Var = 4j^3 t^2 and
/// E R^2 = (j^4-j^2)/3 t^2. Used for j far beyond what the symbolic engine
/// expands; agreement with stein_bound is checked for small j.
SteinBound unitary_bound_closed_form(int j, int n);

}  // namespace traceclt::stein
