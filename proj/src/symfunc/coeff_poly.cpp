#include "traceclt/symfunc/coeff_poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace traceclt {

CoeffPoly::CoeffPoly(const Rational& c, int order) : order_(order) {
  if (order_ < 0) order_ = 0;
  add_term({0, 0}, c);
}

CoeffPoly::CoeffPoly(long c, int order) : CoeffPoly(Rational(c), order) {}

CoeffPoly CoeffPoly::monomial(const Rational& c, int n_degree, int t_degree, int order) {
  CoeffPoly p;
  p.order_ = std::max(order, 0);
  p.add_term({n_degree, t_degree}, c);
  return p;
}

void CoeffPoly::add_term(const Key& key, const Rational& c) {
  if (key.second > order_ || sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

CoeffPoly CoeffPoly::truncated(int order) const {
  CoeffPoly out;
  out.order_ = std::min(std::max(order, 0), order_);
  for (const auto& [key, c] : terms_) out.add_term(key, c);
  return out;
}

bool CoeffPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Key{0, 0});
}

Rational CoeffPoly::coefficient(int n_degree, int t_degree) const {
  auto it = terms_.find({n_degree, t_degree});
  return it == terms_.end() ? Rational(0) : it->second;
}

CoeffPoly CoeffPoly::t_coefficient(int k) const {
  CoeffPoly out;
  for (const auto& [key, c] : terms_)
    if (key.second == k) out.add_term({key.first, 0}, c);
  return out;
}

int CoeffPoly::n_degree() const {
  int d = -1;
  for (const auto& [key, c] : terms_) d = std::max(d, key.first);
  return d;
}

int CoeffPoly::t_degree() const {
  int d = -1;
  for (const auto& [key, c] : terms_) d = std::max(d, key.second);
  return d;
}

CoeffPoly CoeffPoly::evaluate_n(const Rational& n_value) const {
  CoeffPoly out;
  out.order_ = order_;
  for (const auto& [key, c] : terms_) {
    Rational power = 1;
    for (int i = 0; i < key.first; ++i) power *= n_value;
    out.add_term({0, key.second}, c * power);
  }
  return out;
}

double CoeffPoly::evaluate(double n_value, double t_value) const {
  double sum = 0.0;
  for (const auto& [key, c] : terms_)
    sum += c.get_d() * std::pow(n_value, key.first) * std::pow(t_value, key.second);
  return sum;
}

CoeffPoly& CoeffPoly::operator+=(const CoeffPoly& other) {
  if (other.order_ < order_) *this = truncated(other.order_);
  for (const auto& [key, c] : other.terms_) add_term(key, c);
  return *this;
}

CoeffPoly& CoeffPoly::operator-=(const CoeffPoly& other) {
  if (other.order_ < order_) *this = truncated(other.order_);
  for (const auto& [key, c] : other.terms_) add_term(key, -c);
  return *this;
}

CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b) {
  CoeffPoly out;
  out.order_ = std::min(a.order_, b.order_);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      out.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
  return out;
}

CoeffPoly& CoeffPoly::operator*=(const CoeffPoly& other) { return *this = *this * other; }

CoeffPoly CoeffPoly::operator-() const {
  CoeffPoly out = *this;
  for (auto& [key, c] : out.terms_) c = -c;
  return out;
}

Rational ratio(long num, long den) {
  Rational q{BigInt(num), BigInt(den)};
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

std::string CoeffPoly::to_string() const {
  if (terms_.empty()) return "0";
  // t-degree ascending, then n-degree descending.
  std::vector<std::pair<Key, Rational>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
    if (x.first.second != y.first.second) return x.first.second < y.first.second;
    return x.first.first > y.first.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : ordered) {
    Rational magnitude = abs(c);
    bool negative = sgn(c) < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    bool has_symbol = key.first > 0 || key.second > 0;
    if (!has_symbol || magnitude != 1) factors.push_back(magnitude.get_str());
    if (key.first == 1) factors.emplace_back("n");
    if (key.first > 1) factors.push_back("n^" + std::to_string(key.first));
    if (key.second == 1) factors.emplace_back("t");
    if (key.second > 1) factors.push_back("t^" + std::to_string(key.second));
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

}  // namespace traceclt
