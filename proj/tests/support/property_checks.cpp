#include "property_checks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "traceclt/cli/report.hpp"
#include "traceclt/ensembles/batch.hpp"
#include "traceclt/moments/moments.hpp"
#include "traceclt/symfunc/laplacian.hpp"

namespace traceclt::testing {

namespace {

constexpr Group kGroups[] = {Group::SpecialOrthogonal, Group::UnitarySymplectic, Group::Unitary};

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }
  Group group() { return kGroups[uniform(0, 2)]; }
  std::mt19937_64& engine() { return rng_; }

  Rational rational() {
    const int den = uniform(1, 4);
    return ratio(uniform(-5, 5), den);
  }

  /// Polynomial in n (and t when with_t) with small rational coefficients.
  CoeffPoly coeff(int order, bool with_t = true) {
    CoeffPoly c(0, order);
    const int terms = uniform(1, 3);
    for (int k = 0; k < terms; ++k)
      c += CoeffPoly::monomial(rational(), uniform(0, 2), with_t ? uniform(0, 1) : 0, order);
    return c;
  }

  /// Arbitrary polynomial; raw indices may be zero or negative.
  PowerSumPoly poly(Group g, int order = 1) {
    PowerSumPoly f(g, order);
    const int terms = uniform(0, 4);
    for (int k = 0; k < terms; ++k) {
      std::vector<PowerLetter> letters;
      const int size = uniform(0, 3);
      for (int i = 0; i < size; ++i) letters.push_back({uniform(-3, 4), coin()});
      f += PowerSumPoly::product(g, letters, coeff(order), order);
    }
    return f;
  }

  /// Linear combination of generators in the supported Laplacian domain.
  PowerSumPoly domain_poly(Group g) {
    PowerSumPoly f(g, 1);
    const int terms = uniform(1, 4);
    for (int k = 0; k < terms; ++k) {
      const int j = uniform(1, 6);
      const bool conj = has_conjugates(g) && coin();
      std::vector<PowerLetter> letters;
      switch (uniform(0, has_conjugates(g) ? 3 : 2)) {
        case 0:
          break;
        case 1:
          letters = {{j, conj}};
          break;
        case 2:
          letters = {{j, conj}, {j, conj}};
          break;
        default:
          letters = {{j, false}, {j, true}};
      }
      f += PowerSumPoly::product(g, letters, coeff(1, false), 1);
    }
    return f;
  }

 private:
  std::mt19937_64 rng_;
};

bool has_conjugated_letter(const PowerSumPoly& f) {
  for (const auto& [m, c] : f.terms())
    for (const auto& l : m.letters())
      if (l.conjugated) return true;
  return false;
}

/// Re-normalizes every letter of every monomial.
PowerSumPoly renormalize(const PowerSumPoly& f) {
  PowerSumPoly out(f.group(), f.truncation_order());
  for (const auto& [m, c] : f.terms()) out += PowerSumPoly::product(f.group(), m.letters(), c, f.truncation_order());
  return out;
}

using Check = std::function<std::string(Gen&)>;  // empty string on success

PropertyResult run(const std::string& name, std::uint64_t seed, int cases, const Check& check) {
  PropertyResult r;
  r.name = name;
  Gen gen(seed ^ std::hash<std::string>{}(name));
  for (int i = 0; i < cases; ++i) {
    ++r.cases;
    std::string failure;
    try {
      failure = check(gen);
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    if (!failure.empty()) {
      r.ok = false;
      r.counterexample = failure;
      break;
    }
  }
  return r;
}

std::string describe(const char* what, const PowerSumPoly& a, const PowerSumPoly& b) {
  return std::string(what) + ": " + a.to_string() + "  vs  " + b.to_string();
}

}  // namespace

std::vector<PropertyResult> run_property_suite(std::uint64_t seed, int cases) {
  std::vector<PropertyResult> out;
  const int heavy = std::max(1, cases / 20);

  out.push_back(run("ring: addition commutes and associates", seed, cases, [](Gen& g) {
    const Group grp = g.group();
    const auto f = g.poly(grp), h = g.poly(grp), k = g.poly(grp);
    if (f + h != h + f) return describe("f+g", f + h, h + f);
    if ((f + h) + k != f + (h + k)) return describe("(f+g)+h", (f + h) + k, f + (h + k));
    if (f + PowerSumPoly(grp) != f) return describe("f+0", f + PowerSumPoly(grp), f);
    if (!(f - f).is_zero()) return describe("f-f", f - f, PowerSumPoly(grp));
    return std::string();
  }));

  out.push_back(run("ring: multiplication commutes, associates, distributes", seed, cases, [](Gen& g) {
    const Group grp = g.group();
    const auto f = g.poly(grp), h = g.poly(grp), k = g.poly(grp);
    if (f * h != h * f) return describe("fg", f * h, h * f);
    if ((f * h) * k != f * (h * k)) return describe("(fg)h", (f * h) * k, f * (h * k));
    if (f * (h + k) != f * h + f * k) return describe("f(g+h)", f * (h + k), f * h + f * k);
    const auto one = PowerSumPoly::constant(grp, CoeffPoly(1, 1));
    if (f * one != f) return describe("f*1", f * one, f);
    return std::string();
  }));

  out.push_back(run("normalization is idempotent", seed, cases, [](Gen& g) {
    const auto f = g.poly(g.group());
    if (renormalize(f) != f) return describe("renormalize", renormalize(f), f);
    if (f.truncated(0).truncated(0) != f.truncated(0)) return std::string("truncation not idempotent");
    for (const auto& [m, c] : f.terms()) {
      if (c.is_zero()) return "zero coefficient stored for " + m.to_string();
      for (const auto& l : m.letters())
        if (l.index < 1) return "unnormalized letter in " + m.to_string();
    }
    return std::string();
  }));

  out.push_back(run("conjugation is a ring involution on U", seed, cases, [](Gen& g) {
    const auto f = g.poly(Group::Unitary), h = g.poly(Group::Unitary);
    if (conjugate(conjugate(f)) != f) return describe("conj conj f", conjugate(conjugate(f)), f);
    if (conjugate(f * h) != conjugate(f) * conjugate(h)) return std::string("conj(fg) != conj f conj g");
    if (conjugate(f + h) != conjugate(f) + conjugate(h)) return std::string("conj(f+g) != conj f + conj g");
    return std::string();
  }));

  out.push_back(run("laplacian is Q[n]-linear", seed, cases, [](Gen& g) {
    const Group grp = g.group();
    const auto f = g.domain_poly(grp), h = g.domain_poly(grp);
    const CoeffPoly alpha = g.coeff(1, false), beta = g.coeff(1, false);
    const auto lhs = laplacian(alpha * f + beta * h);
    const auto rhs = alpha * laplacian(f) + beta * laplacian(h);
    if (lhs != rhs) return describe("Delta(af+bg)", lhs, rhs);
    if (heat_first_order(f) != f + CoeffPoly::t(1) * laplacian(f)) return std::string("heat != f + t Delta f");
    return std::string();
  }));

  out.push_back(run("SO/USp outputs stay real", seed, cases, [](Gen& g) {
    const Group grp = g.coin() ? Group::SpecialOrthogonal : Group::UnitarySymplectic;
    const auto f = g.poly(grp), h = g.poly(grp), d = g.domain_poly(grp);
    for (const auto& p : {f, h, f + h, f * h, laplacian(d), heat_first_order(d), substitute_n(f, g.uniform(1, 9))})
      if (has_conjugated_letter(p)) return "conjugated letter in " + p.to_string();
    return std::string();
  }));

  out.push_back(run("truncation commutes with arithmetic", seed, cases, [](Gen& g) {
    const Group grp = g.group();
    const auto f = g.poly(grp), h = g.poly(grp), d = g.domain_poly(grp);
    if ((f * h).truncated(0) != f.truncated(0) * h.truncated(0)) return std::string("product");
    if ((f + h).t_coefficient(0) != (f.truncated(0) + h.truncated(0))) return std::string("sum");
    if (laplacian(d).truncated(0) != laplacian(d.truncated(0))) return std::string("laplacian");
    return std::string();
  }));

  out.push_back(run("moments: parity vanishing and factorization", seed, cases, [](Gen& g) {
    const Group grp = g.group();
    moments::MomentQuery q1{grp, {}, {}}, q2{grp, {}, {}}, joint{grp, {}, {}};
    for (int j = 1; j <= 4; ++j) {
      const int a = g.uniform(0, 3);
      if (a == 0) continue;
      (j % 2 ? q1 : q2).a[j] = a;
      joint.a[j] = a;
      if (has_conjugates(grp)) {
        const int b = g.uniform(0, 3);
        if (b > 0) {
          (j % 2 ? q1 : q2).b[j] = b;
          joint.b[j] = b;
        }
      }
    }
    const Rational whole = moments::moment(joint).value;
    if (whole != moments::moment(q1).value * moments::moment(q2).value) return std::string("factorization");
    if (!has_conjugates(grp))
      for (const auto& [j, a] : joint.a)
        if (j % 2 == 1 && a % 2 == 1 && whole != 0) return "odd power of p_" + std::to_string(j) + " not zero";
    if (has_conjugates(grp) && joint.a != joint.b && whole != 0) return std::string("a != b but moment nonzero");
    return std::string();
  }));

  out.push_back(run("KS distance in [0,1] and permutation invariant", seed, cases, [](Gen& g) {
    const int N = g.uniform(1, 200);
    std::normal_distribution<double> z(g.uniform(-2, 2) * 0.5, 1.0 + g.uniform(0, 3));
    std::vector<double> xs(N);
    for (double& x : xs) x = z(g.engine());
    const double d = ensembles::ks_distance(xs);
    if (!(d >= 0.0 && d <= 1.0)) return "ks = " + std::to_string(d);
    std::shuffle(xs.begin(), xs.end(), g.engine());
    if (ensembles::ks_distance(xs) != d) return std::string("permutation changed ks");
    return std::string();
  }));

  out.push_back(run("fixed seed reproduces batches bit for bit", seed, heavy, [](Gen& g) {
    ensembles::BatchConfig c;
    c.group = g.group();
    c.n = g.uniform(1, 6);
    c.samples = static_cast<std::size_t>(g.uniform(1, 60));
    c.seed = g.engine()();
    c.max_power = 4;
    c.threads = 1;
    const auto one = ensembles::run_batch(c);
    c.threads = 3;
    const auto three = ensembles::run_batch(c);
    if (one.traces != three.traces) return std::string("thread count changed traces");
    if (ensembles::run_batch(c).traces != three.traces) return std::string("rerun changed traces");
    c.seed += 1;
    if (c.group != Group::SpecialOrthogonal || c.n > 1)
      if (ensembles::run_batch(c).traces == three.traces) return std::string("seed change had no effect");
    return std::string();
  }));

  out.push_back(run("reports round-trip through text", seed, cases, [](Gen& g) {
    cli::ExperimentReport r;
    r.header = {{"schema_version", "1"}, {"tool_version", "x"}, {"ks_tolerance", "0.02"}};
    std::uniform_real_distribution<double> u(-1e3, 1e3);
    const int rows = g.uniform(0, 5);
    for (int i = 0; i < rows; ++i) {
      cli::ExperimentRow row;
      row.group = g.group();
      row.n = g.uniform(1, 500);
      row.j = g.uniform(1, 20);
      row.N = static_cast<std::size_t>(g.uniform(1, 1000000));
      row.seed = g.engine()();
      for (double* x : {&row.ks, &row.bound_term1, &row.bound_term2, &row.bound_total, &row.mean_W,
                        &row.var_W, &row.oracle_mean, &row.oracle_var})
        *x = u(g.engine()) * std::pow(10.0, g.uniform(-300, 300) / 10);
      row.pass = g.coin();
      if (row.group == Group::Unitary) row.reference = u(g.engine());
      r.rows.push_back(row);
    }
    if (cli::parse_report(cli::emit_report(r)) != r) return std::string("parse(emit(r)) != r");
    return std::string();
  }));

  return out;
}

}  // namespace traceclt::testing
