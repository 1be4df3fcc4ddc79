#include "traceclt/symfunc/power_sum.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace traceclt {

namespace {

CoeffPoly identity_trace(Group g, int order) {
  return g == Group::UnitarySymplectic ? CoeffPoly::monomial(2, 1, 0, order)
                                       : CoeffPoly::n(order);
}

std::string render_letters(const std::vector<PowerLetter>& letters, bool conjugated) {
  std::vector<int> idx;
  for (const auto& l : letters)
    if (l.conjugated == conjugated) idx.push_back(l.index);
  if (idx.empty()) return {};
  std::ostringstream os;
  os << (conjugated ? "pbar_" : "p_");
  if (idx.size() == 1 && idx[0] < 10) {
    os << idx[0];
  } else {
    os << '{';
    for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
    os << '}';
  }
  return os.str();
}

}  // namespace

Monomial::Monomial(std::vector<PowerLetter> letters) : letters_(std::move(letters)) {
  std::sort(letters_.begin(), letters_.end());
}

int Monomial::weight() const {
  return std::accumulate(letters_.begin(), letters_.end(), 0,
                         [](int s, const PowerLetter& l) { return s + l.index; });
}

Monomial Monomial::operator*(const Monomial& other) const {
  std::vector<PowerLetter> merged;
  merged.reserve(letters_.size() + other.letters_.size());
  std::merge(letters_.begin(), letters_.end(), other.letters_.begin(), other.letters_.end(),
             std::back_inserter(merged));
  Monomial out;
  out.letters_ = std::move(merged);
  return out;
}

Monomial Monomial::conjugated() const {
  std::vector<PowerLetter> flipped = letters_;
  for (auto& l : flipped) l.conjugated = !l.conjugated;
  return Monomial(std::move(flipped));
}

std::string Monomial::to_string() const {
  if (letters_.empty()) return "1";
  std::string plain = render_letters(letters_, false);
  std::string bar = render_letters(letters_, true);
  if (plain.empty()) return bar;
  if (bar.empty()) return plain;
  return plain + "*" + bar;
}

PowerSumPoly::PowerSumPoly(Group group, int truncation_order)
    : group_(group), order_(std::max(truncation_order, 0)) {}

PowerSumPoly PowerSumPoly::constant(Group group, const CoeffPoly& c, int truncation_order) {
  PowerSumPoly p(group, truncation_order);
  p.add_term(Monomial{}, c);
  return p;
}

PowerSumPoly PowerSumPoly::letter(Group group, int index, bool conjugated, int truncation_order) {
  return normalize({index, conjugated}, group, truncation_order);
}

PowerSumPoly PowerSumPoly::product(Group group, const std::vector<PowerLetter>& raw,
                                   const CoeffPoly& c, int truncation_order) {
  PowerSumPoly out = constant(group, c, truncation_order);
  for (const auto& l : raw) out *= normalize(l, group, truncation_order);
  return out;
}

CoeffPoly PowerSumPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? CoeffPoly() : it->second;
}

void PowerSumPoly::add_term(const Monomial& m, const CoeffPoly& c) {
  for (const auto& l : m.letters()) {
    if (l.index < 1) throw std::logic_error("un-normalized letter index " + std::to_string(l.index));
    if (l.conjugated && !has_conjugates(group_))
      throw std::logic_error("conjugated letter outside U(n)");
  }
  CoeffPoly cut = c.truncated(order_);
  if (cut.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, cut);
  if (!inserted) {
    it->second += cut;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void PowerSumPoly::require_compatible(const PowerSumPoly& other, const char* op) const {
  if (group_ != other.group_)
    throw GroupMismatch(std::string(op) + ": group mismatch (" + std::string(group_tag(group_)) +
                        " vs " + std::string(group_tag(other.group_)) + ")");
  if (order_ != other.order_)
    throw TruncationMismatch(std::string(op) + ": truncation order mismatch (" +
                             std::to_string(order_) + " vs " + std::to_string(other.order_) + ")");
}

PowerSumPoly PowerSumPoly::t_coefficient(int k, int result_order) const {
  PowerSumPoly out(group_, result_order);
  for (const auto& [m, c] : terms_) out.add_term(m, c.t_coefficient(k));
  return out;
}

PowerSumPoly PowerSumPoly::truncated(int order) const {
  PowerSumPoly out(group_, std::min(order, order_));
  for (const auto& [m, c] : terms_) out.add_term(m, c);
  return out;
}

PowerSumPoly& PowerSumPoly::operator+=(const PowerSumPoly& other) {
  require_compatible(other, "add");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

PowerSumPoly& PowerSumPoly::operator-=(const PowerSumPoly& other) {
  require_compatible(other, "sub");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

PowerSumPoly operator*(const PowerSumPoly& a, const PowerSumPoly& b) {
  a.require_compatible(b, "mul");
  PowerSumPoly out(a.group_, a.order_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

PowerSumPoly& PowerSumPoly::operator*=(const PowerSumPoly& other) { return *this = *this * other; }

PowerSumPoly& PowerSumPoly::operator*=(const CoeffPoly& c) {
  TermMap scaled;
  for (const auto& [m, coeff] : terms_) {
    CoeffPoly v = (coeff * c).truncated(order_);
    if (!v.is_zero()) scaled.emplace(m, std::move(v));
  }
  terms_ = std::move(scaled);
  return *this;
}

PowerSumPoly PowerSumPoly::operator-() const {
  PowerSumPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

std::string PowerSumPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest-weight monomials first, matching how the identities are usually written.
  std::vector<const TermMap::value_type*> ordered;
  for (const auto& kv : terms_) ordered.push_back(&kv);
  std::stable_sort(ordered.begin(), ordered.end(), [](auto* x, auto* y) {
    return x->first.weight() > y->first.weight();
  });
  for (const auto* kv : ordered) {
    const auto& [m, c] = *kv;
    bool single = c.terms().size() == 1;
    bool negative = single && sgn(c.terms().begin()->second) < 0;
    std::string coeff = single ? (negative ? (-c).to_string() : c.to_string())
                               : "(" + c.to_string() + ")";
    if (first) {
      os << (negative ? "-" : "");
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (m.empty()) {
      os << coeff;
    } else if (coeff == "1") {
      os << m.to_string();
    } else {
      os << coeff << "*" << m.to_string();
    }
  }
  return os.str();
}

PowerSumPoly normalize(PowerLetter raw, Group group, int truncation_order) {
  if (!has_conjugates(group)) raw.conjugated = false;
  if (raw.index == 0) return PowerSumPoly::constant(group, identity_trace(group, truncation_order),
                                                    truncation_order);
  if (raw.index < 0) {
    raw.index = -raw.index;
    if (has_conjugates(group)) raw.conjugated = !raw.conjugated;
  }
  PowerSumPoly p(group, truncation_order);
  p.add_term(Monomial({raw}), CoeffPoly(1));
  return p;
}

PowerSumPoly add(const PowerSumPoly& f, const PowerSumPoly& g) { return f + g; }

PowerSumPoly mul(const PowerSumPoly& f, const PowerSumPoly& g) { return f * g; }

PowerSumPoly conjugate(const PowerSumPoly& f) {
  if (!has_conjugates(f.group()))
    throw UnsupportedOperation("conjugate: only defined for U(n) polynomials; SO/USp traces are real");
  PowerSumPoly out(f.group(), f.truncation_order());
  for (const auto& [m, c] : f.terms()) out.add_term(m.conjugated(), c);
  return out;
}

PowerSumPoly substitute_n(const PowerSumPoly& f, int n_value) {
  if (n_value < 1) throw std::invalid_argument("substitute_n: n must be >= 1");
  PowerSumPoly out(f.group(), f.truncation_order());
  for (const auto& [m, c] : f.terms()) out.add_term(m, c.evaluate_n(Rational(n_value)));
  return out;
}

PowerSumPoly split_sum(Group group, int j, bool conjugated, int truncation_order) {
  PowerSumPoly out(group, truncation_order);
  for (int l = 1; l < j; ++l)
    out += PowerSumPoly::product(group, {{l, conjugated}, {j - l, conjugated}}, CoeffPoly(1),
                                 truncation_order);
  return out;
}

PowerSumPoly reflected_sum(Group group, int j, bool conjugated, int truncation_order) {
  PowerSumPoly out(group, truncation_order);
  for (int l = 1; l < j; ++l) out += normalize({2 * l - j, conjugated}, group, truncation_order);
  return out;
}

}  // namespace traceclt
