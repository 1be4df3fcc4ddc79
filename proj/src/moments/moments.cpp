#include "traceclt/moments/moments.hpp"

#include <algorithm>

namespace traceclt::moments {

namespace {

BigInt binomial(int a, int k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(k));
  return out;
}

BigInt power(long base, int exp) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
  return out;
}

BigInt factorial(int a) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(a));
  return out;
}

}  // namespace

MomentQuery MomentQuery::from_monomial(Group group, const Monomial& m) {
  MomentQuery q;
  q.group = group;
  for (const auto& l : m.letters()) ++(l.conjugated ? q.b : q.a)[l.index];
  return q;
}

int MomentQuery::weight() const {
  int w = 0;
  for (const auto& [j, e] : a) w += j * e;
  for (const auto& [j, e] : b) w += j * e;
  return w;
}

int minimum_dimension(Group group, int weight) {
  switch (group) {
    case Group::SpecialOrthogonal:
      return std::max(1, weight + 1);
    case Group::UnitarySymplectic:
      return std::max(1, weight / 2);  // 2n + 1 >= weight
    case Group::Unitary:
      return std::max(1, weight);
  }
  return 1;
}

BigInt double_factorial_odd(int a) {
  if (a % 2 != 0) return 0;
  BigInt out = 1;
  for (int k = a - 1; k > 1; k -= 2) out *= k;
  return out;
}

Rational g_poly(int j, int a) {
  if (a == 0) return 1;
  if (j % 2 != 0) {
    if (a % 2 != 0) return 0;
    return Rational(power(j, a / 2) * double_factorial_odd(a));
  }
  BigInt sum = 1;
  for (int k = 1; 2 * k <= a; ++k) sum += binomial(a, 2 * k) * power(j, k) * double_factorial_odd(2 * k);
  return Rational(sum);
}

Rational normal_moment(int j, int shift, int a) {
  // E(sqrt(j) Z)^k = j^{k/2} (k-1)!! for even k, 0 for odd k.
  BigInt sum = 0;
  for (int k = 0; k <= a; k += 2) {
    BigInt shift_power = 1;
    for (int i = 0; i < a - k; ++i) shift_power *= shift;
    sum += binomial(a, k) * shift_power * power(j, k / 2) * double_factorial_odd(k);
  }
  return Rational(sum);
}

MomentResult moment(const MomentQuery& q) {
  MomentResult r;
  r.weight = q.weight();
  r.min_n = minimum_dimension(q.group, r.weight);
  Rational value = 1;
  switch (q.group) {
    case Group::SpecialOrthogonal:
      for (const auto& [j, e] : q.a) value *= g_poly(j, e);
      break;
    case Group::UnitarySymplectic:
      for (const auto& [j, e] : q.a) {
        Rational g = g_poly(j, e);
        value *= ((j - 1) * e) % 2 == 0 ? g : Rational(-g);
      }
      break;
    case Group::Unitary: {
      auto strip = [](const std::map<int, int>& m) {
        std::map<int, int> out;
        for (const auto& [j, e] : m)
          if (e != 0) out.emplace(j, e);
        return out;
      };
      if (strip(q.a) != strip(q.b)) {
        value = 0;
        break;
      }
      for (const auto& [j, e] : q.a) value *= Rational(power(j, e) * factorial(e));
      break;
    }
  }
  r.value = value;
  return r;
}

Expectation expectation(const PowerSumPoly& f) {
  Expectation out;
  out.value = CoeffPoly(0, f.truncation_order());
  for (const auto& [m, c] : f.terms()) {
    MomentResult r = moment(MomentQuery::from_monomial(f.group(), m));
    out.max_weight = std::max(out.max_weight, r.weight);
    out.min_n = std::max(out.min_n, r.min_n);
    if (sgn(r.value) != 0) out.value += c * CoeffPoly(r.value);
  }
  return out;
}

namespace {

void partitions(int remaining, int largest, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (int part = std::min(remaining, largest); part >= 1; --part) {
    current.push_back(part);
    partitions(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Monomial> monomials_up_to_weight(Group group, int max_weight) {
  std::vector<std::vector<int>> parts;
  std::vector<int> scratch;
  for (int w = 0; w <= max_weight; ++w) partitions(w, w, scratch, parts);
  auto weight = [](const std::vector<int>& p) {
    int w = 0;
    for (int x : p) w += x;
    return w;
  };
  std::vector<Monomial> out;
  for (const auto& lambda : parts) {
    if (!has_conjugates(group)) {
      if (lambda.empty()) continue;
      std::vector<PowerLetter> letters;
      for (int p : lambda) letters.push_back({p, false});
      out.emplace_back(std::move(letters));
      continue;
    }
    for (const auto& mu : parts) {
      const int w = weight(lambda) + weight(mu);
      if (w == 0 || w > max_weight) continue;
      std::vector<PowerLetter> letters;
      for (int p : lambda) letters.push_back({p, false});
      for (int p : mu) letters.push_back({p, true});
      out.emplace_back(std::move(letters));
    }
  }
  return out;
}

}  // namespace traceclt::moments
