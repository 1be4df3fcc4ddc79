#include "traceclt/stein/bound.hpp"

#include <cmath>
#include <stdexcept>

#include "traceclt/stein/lemmas.hpp"

namespace traceclt::stein {

namespace {

Rational t2_constant(const SymbolicValue& v, const char* what) {
  const CoeffPoly c = v.value.t_coefficient(2);
  if (!c.is_constant())
    throw std::logic_error(std::string(what) + ": t^2 coefficient depends on n: " + c.to_string());
  return c.coefficient(0, 0);
}

CoeffPoly drift_rate(const StatisticSpec& spec) {
  return conditional_drift(spec).a.t_coefficient(1);
}

void finish(SteinBound& b) {
  b.total = b.term1 + b.term2 + b.term3;
  b.explicit_constant = b.total * b.n / b.j;
  if (b.group == Group::Unitary) {
    b.quoted_term2 = 19.0 * b.j / (2.0 * b.n);
    b.reference = 22.0 * b.j / b.n;
  }
}

}  // namespace

double SymbolicTerm::value(int n) const {
  return std::sqrt(radicand.get_d()) / denominator.evaluate(static_cast<double>(n));
}

bool SymbolicTerm::same_as(const SymbolicTerm& other) const {
  // sqrt(a)/p = sqrt(b)/q  <=>  a q^2 = b p^2 (denominators positive for valid n)
  return CoeffPoly(radicand) * other.denominator * other.denominator ==
         CoeffPoly(other.radicand) * denominator * denominator;
}

std::string SymbolicTerm::to_string() const {
  return "sqrt(" + radicand.get_str() + ")/(" + denominator.to_string() + ")";
}

SymbolicTerm term1_symbolic(const StatisticSpec& spec) {
  return {Rational(36) * t2_constant(variance_coefficient(spec), "variance"), drift_rate(spec)};
}

SymbolicTerm term2_symbolic(const StatisticSpec& spec) {
  return {Rational(361) * t2_constant(r_second_moment(spec), "E[R^2]"), drift_rate(spec)};
}

SteinBound stein_bound(const StatisticSpec& spec, int n_value) {
  if (n_value < 1) throw std::invalid_argument("stein_bound: n must be >= 1");
  SteinBound b;
  b.group = spec.group;
  b.j = spec.j;
  b.n = n_value;
  b.term1_symbolic = term1_symbolic(spec);
  b.term2_symbolic = term2_symbolic(spec);
  if (n_value < stein_threshold(spec)) {
    b.trivial = true;
    b.total = 1.0;
    b.explicit_constant = static_cast<double>(n_value) / spec.j;
    if (spec.group == Group::Unitary) b.reference = 22.0 * spec.j / n_value;
    return b;
  }
  b.term1 = b.term1_symbolic.value(n_value);
  b.term2 = b.term2_symbolic.value(n_value);
  finish(b);
  return b;
}

SteinBound unitary_bound_closed_form(int j, int n) {
  SteinBound b;
  b.group = Group::Unitary;
  b.j = j;
  b.n = n;
  if (n < 4 * j) {
    b.trivial = true;
    b.total = 1.0;
    b.reference = 22.0 * j / n;
    return b;
  }
  b.term1 = 12.0 * std::sqrt(static_cast<double>(j)) / n;
  b.term2 = 19.0 * std::sqrt((static_cast<double>(j) * j - 1.0) / 3.0) / n;
  finish(b);
  return b;
}

}  // namespace traceclt::stein
