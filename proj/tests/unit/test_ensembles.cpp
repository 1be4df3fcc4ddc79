#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "traceclt/ensembles/batch.hpp"

using namespace traceclt;
using namespace traceclt::ensembles;

namespace {

constexpr Group SO = Group::SpecialOrthogonal;
constexpr Group USp = Group::UnitarySymplectic;
constexpr Group U = Group::Unitary;
constexpr Group kGroups[] = {SO, USp, U};

MatrixSample identity(Group g, int n) {
  MatrixSample m;
  m.group = g;
  m.n = n;
  const int d = matrix_dimension(g, n);
  m.entries = Eigen::MatrixXcd::Identity(d, d);
  return m;
}

// Composite Simpson rule for the Gaussian density on [-12, x].
double simpson_cdf(double x) {
  const int steps = 200000;
  const double a = -12.0, h = (x - a) / steps;
  auto f = [](double z) { return std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi); };
  double s = f(a) + f(x);
  for (int i = 1; i < steps; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return s * h / 3.0;
}

double normal_quantile(double p) {
  double lo = -40.0, hi = 40.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (normal_cdf(mid) < p ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

SampleBatch batch(Group g, int n, std::size_t N, std::uint64_t seed, int max_power) {
  BatchConfig c;
  c.group = g;
  c.n = n;
  c.samples = N;
  c.seed = seed;
  c.max_power = max_power;
  return run_batch(c);
}

}  // namespace

TEST_CASE("Philox4x32-10 known-answer vectors") {
  using A = std::array<std::uint32_t, 4>;
  CHECK(philox4x32({0, 0, 0, 0}, {0, 0}) == A{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
  CHECK(philox4x32({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
        A{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
  CHECK(philox4x32({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
        A{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("streams are reproducible and independent") {
  PhiloxStream a(42, 7), b(42, 7), c(42, 8), d(43, 7);
  std::vector<std::uint64_t> va, vb, vc, vd;
  for (int i = 0; i < 16; ++i) {
    va.push_back(a());
    vb.push_back(b());
    vc.push_back(c());
    vd.push_back(d());
  }
  CHECK(va == vb);
  CHECK(va != vc);
  CHECK(va != vd);

  PhiloxStream g(1, 0);
  double sum = 0, sum2 = 0, umin = 1;
  const int N = 200000;
  for (int i = 0; i < N; ++i) {
    const double z = g.normal();
    sum += z;
    sum2 += z * z;
  }
  for (int i = 0; i < 1000; ++i) umin = std::min(umin, g.uniform_open_zero());
  CHECK(std::abs(sum / N) < 5.0 / std::sqrt(N));
  CHECK(std::abs(sum2 / N - 1.0) < 5.0 * std::sqrt(2.0 / N));
  CHECK(umin > 0.0);
}

TEST_CASE("Haar samplers satisfy the defining relations") {
  for (int n : {1, 2, 3, 5, 8, 17}) {
    for (std::uint64_t s = 0; s < 5; ++s) {
      PhiloxStream rng(9, s);
      for (Group g : kGroups) {
        const MatrixSample m = sample_haar(g, n, rng);
        CHECK(m.dimension() == matrix_dimension(g, n));
        const auto r = membership_residuals(m);
        CHECK(r.unitarity <= 1e-10);
        CHECK(r.within(g));
        if (g == SO) {
          CHECK(r.imaginary == 0.0);
          CHECK(r.determinant <= 1e-8);
        }
        if (g == USp) CHECK(r.symplectic <= 1e-10);
      }
    }
  }
}

TEST_CASE("small-dimension samplers") {
  PhiloxStream rng(3, 0);
  const auto u1 = sample_unitary(1, rng);
  CHECK(std::abs(std::abs(u1.entries(0, 0)) - 1.0) < 1e-14);
  CHECK(sample_special_orthogonal(1, rng).entries(0, 0) == std::complex<double>(1.0, 0.0));
  for (int i = 0; i < 50; ++i) {
    const auto sp = sample_symplectic(1, rng);
    const auto tr = sp.entries.trace();
    CHECK(std::abs(tr.imag()) < 1e-12);
    CHECK(std::abs(tr.real()) <= 2.0 + 1e-12);
  }
  CHECK_THROWS_AS(sample_unitary(0, rng), std::invalid_argument);
}

TEST_CASE("symplectic samples carry the quaternionic block structure") {
  PhiloxStream rng(4, 1);
  const int n = 5;
  const auto m = sample_symplectic(n, rng);
  const Eigen::MatrixXcd A = m.entries.topLeftCorner(n, n), B = m.entries.topRightCorner(n, n);
  CHECK((m.entries.bottomLeftCorner(n, n) + B.conjugate()).cwiseAbs().maxCoeff() < 1e-14);
  CHECK((m.entries.bottomRightCorner(n, n) - A.conjugate()).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("membership violations are integrity errors") {
  PhiloxStream rng(5, 0);
  auto m = sample_unitary(4, rng);
  m.entries(0, 0) *= 1.001;
  CHECK_THROWS_AS(require_membership(m), IntegrityError);
  auto o = sample_special_orthogonal(4, rng);
  o.entries.col(0) = -o.entries.col(0);
  CHECK_FALSE(membership_residuals(o).within(SO));
  o.entries.col(0) = -o.entries.col(0);
  o.entries(1, 1) += std::complex<double>(0.0, 1e-18);
  CHECK_THROWS_AS(require_membership(o), IntegrityError);
}

TEST_CASE("eigenangles and traces") {
  for (Group g : kGroups) {
    const auto id = identity(g, 3);
    for (auto method : {SpectralMethod::Automatic, SpectralMethod::GeneralSchur}) {
      const auto s = eigenangles(id, method);
      CHECK(s.dimension() == id.dimension());
      for (double a : s.angles) CHECK(std::abs(a) < 1e-12);
      for (int j = 1; j <= 5; ++j) CHECK(std::abs(trace_power(s, j) - double(s.dimension())) < 1e-12);
    }
    const auto s = eigenangles(id);
    const stein::StatisticSpec spec1{g, 1}, spec2{g, 2};
    if (g == U) CHECK(statistic_W(spec1, s) == doctest::Approx(3.0 * std::sqrt(2.0)));
    if (g == SO) CHECK(statistic_W(spec2, s) == doctest::Approx(2.0 / std::sqrt(2.0)));
    if (g == USp) CHECK(statistic_W(spec2, s) == doctest::Approx(7.0 / std::sqrt(2.0)));
  }

  for (int n : {1, 2, 7, 8, 13}) {
    for (std::uint64_t i = 0; i < 4; ++i) {
      PhiloxStream rng(11, i);
      for (Group g : kGroups) {
        const auto m = sample_haar(g, n, rng);
        const auto fast = eigenangles(m);
        const auto general = eigenangles(m, SpectralMethod::GeneralSchur);
        CHECK(std::is_sorted(fast.angles.begin(), fast.angles.end()));
        for (double a : fast.angles) CHECK((a > -std::numbers::pi && a <= std::numbers::pi));
        CHECK(std::abs(trace_power(fast, 1) - m.entries.trace()) < 1e-8);
        CHECK(std::abs(trace_power(general, 1) - m.entries.trace()) < 1e-8);
        const auto direct = trace_powers_direct(m, 6);
        const auto swept = trace_powers(fast, 6);
        for (int j = 1; j <= 6; ++j) {
          CHECK(std::abs(swept[j - 1] - direct[j - 1]) < 1e-8);
          CHECK(std::abs(trace_power(fast, j)) <= fast.dimension() + 1e-9);
        }
        if (g != U) {
          CHECK(conjugate_asymmetry(general) < 1e-8);
          CHECK(conjugate_asymmetry(fast) < 1e-8);
        } else {
          for (int j = 1; j <= 4; ++j)
            CHECK(std::abs(trace_power(fast, -j) - std::conj(trace_power(fast, j))) < 1e-12);
        }
      }
    }
  }
  SpectralSample lopsided;
  lopsided.group = SO;
  lopsided.angles = {0.3, 1.1};
  CHECK_THROWS_AS(trace_power(lopsided, 1), IntegrityError);
  CHECK_THROWS_AS(statistic_W({U, 1}, lopsided), GroupMismatch);
}

TEST_CASE("normal CDF") {
  CHECK(normal_cdf(0.0) == 0.5);
  for (double x : {0.1, 0.5, 1.0, 2.5, 4.0, 7.5})
    CHECK(std::abs(normal_cdf(x) + normal_cdf(-x) - 1.0) < 1e-12);
  CHECK(std::abs(normal_cdf(1.959964) - 0.975) < 1e-6);
  CHECK(std::abs(normal_cdf(1.959964) - simpson_cdf(1.959964)) < 1e-12);
  CHECK(std::abs(normal_cdf(-1.3) - simpson_cdf(-1.3)) < 1e-12);
  CHECK(normal_cdf(-10.0) > 0.0);
  CHECK(normal_cdf(-10.0) == doctest::Approx(7.61985302416e-24).epsilon(1e-9));
}

TEST_CASE("Kolmogorov distance") {
  CHECK(ks_distance(std::vector<double>{0.0}) == 0.5);
  for (int N : {1, 2, 10, 1000}) {
    std::vector<double> q(N);
    for (int i = 0; i < N; ++i) q[i] = normal_quantile((i + 0.5) / N);
    CHECK(ks_distance(q) <= 0.5 / N + 1e-12);
  }
  CHECK(ks_distance(std::vector<double>{100.0, 101.0}) == doctest::Approx(1.0));
  std::vector<double> xs{0.3, -1.2, 2.2, 0.0};
  const double d = ks_distance(xs);
  std::reverse(xs.begin(), xs.end());
  CHECK(ks_distance(xs) == d);
}

TEST_CASE("batches are deterministic across worker counts") {
  BatchConfig c;
  c.group = U;
  c.n = 6;
  c.samples = 37;
  c.seed = 1234;
  c.max_power = 3;
  c.threads = 1;
  const auto one = run_batch(c);
  c.threads = 4;
  const auto four = run_batch(c);
  CHECK(one.traces == four.traces);
  PhiloxStream rng(1234, 20);
  const auto s = eigenangles(sample_unitary(6, rng));
  CHECK(one.trace(20, 2) == trace_powers(s, 3)[1]);
  CHECK(one.trace(20, -2) == std::conj(one.trace(20, 2)));
  CHECK(one.trace(0, 0) == 6.0);
  CHECK_THROWS_AS(one.trace(0, 4), std::out_of_range);
  CHECK(one.worst_residuals.unitarity <= 1e-10);
}

TEST_CASE("thread count resolution") {
  CHECK(resolve_threads(3, 100) == 3);
  CHECK(resolve_threads(8, 2) == 2);
  CHECK(resolve_threads(0, 1) == 1);
  CHECK(resolve_threads(0, 100) >= 1);
}

TEST_CASE("matrix-power cross-check path") {
  for (Group g : kGroups) {
    BatchConfig c;
    c.group = g;
    c.n = 5;
    c.samples = 20;
    c.seed = 77;
    c.max_power = 8;
    c.cross_check = true;
    const auto b = run_batch(c);
    CHECK(b.worst_cross_check < 1e-8);
  }
}

TEST_CASE("batch statistics") {
  const auto b = batch(SO, 8, 200, 5, 2);
  const auto st = batch_stats(b, 2);
  CHECK(st.count == 200);
  CHECK(std::is_sorted(st.sorted.begin(), st.sorted.end()));
  const double d = ks_distance(st);
  CHECK((d >= 0.0 && d <= 1.0));
  const auto w = statistic_values(b, 2);
  double mean = 0;
  for (double x : w) mean += x;
  CHECK(st.mean() == doctest::Approx(mean / 200).epsilon(1e-12));
  CHECK_THROWS_AS(statistic_values(b, 3), std::invalid_argument);
  const auto single = batch_stats(batch(U, 3, 1, 5, 1), 1);
  CHECK(single.variance() == 0.0);
  CHECK(ks_distance(single) >= 0.5);
}

TEST_CASE("sample means match the moment oracle") {
  const std::size_t N = 100000;
  const double tol = 5.0 / std::sqrt(double(N));
  const auto u = batch(U, 8, N, 2024, 2);
  const auto tr = empirical_moment(u, Monomial({{1, false}}));
  CHECK(std::abs(tr.estimate.mean) <= tol * 1.0);  // E|Tr M|^2 = 1

  const auto pp = empirical_moment(u, Monomial({{1, false}, {1, true}}));
  CHECK(std::abs(pp.estimate.mean.real() - 1.0) <= 5.0 * pp.estimate.se_real);
  CHECK(pp.within_validity);

  const auto so = batch(SO, 8, N, 2025, 2);
  const auto so2 = empirical_moment(so, Monomial({{2, false}}));
  CHECK(std::abs(so2.estimate.mean.real() - 1.0) <= 5.0 * so2.estimate.se_real);

  const auto sp = batch(USp, 8, N, 2026, 2);
  const auto sp2 = empirical_moment(sp, Monomial({{2, false}}));
  CHECK(std::abs(sp2.estimate.mean.real() + 1.0) <= 5.0 * sp2.estimate.se_real);

  const auto so16 = batch(SO, 16, 20000, 2027, 3);
  const auto p33 = empirical_moment(so16, Monomial({{3, false}, {3, false}}));
  CHECK(std::abs(p33.estimate.mean.real() - 3.0) <= 5.0 * p33.estimate.se_real);

  const auto empty = empirical_moment(so16, Monomial());
  CHECK(empty.estimate.mean == std::complex<double>(1.0, 0.0));
  CHECK(empty.estimate.se_real == 0.0);
  CHECK(empty.estimate.se_imag == 0.0);

  CHECK_FALSE(empirical_moment(batch(SO, 3, 10, 1, 3), Monomial({{3, false}})).within_validity);
  CHECK_THROWS_AS(empirical_moment(so16, Monomial({{4, false}})), std::invalid_argument);
}
