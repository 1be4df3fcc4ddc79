#include "traceclt/ensembles/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace traceclt::ensembles {

namespace {

constexpr double kModulusTolerance = 1e-8;
constexpr double kImaginaryTolerance = 1e-8;

double wrap_angle(double theta) {
  return theta <= -std::numbers::pi ? std::numbers::pi : theta;
}

SpectralSample shell(const MatrixSample& m) {
  SpectralSample s;
  s.group = m.group;
  s.n = m.n;
  s.seed = m.seed;
  s.stream = m.stream;
  return s;
}

std::string where(const SpectralSample& s) {
  std::ostringstream os;
  os << group_tag(s.group) << "(" << s.dimension() << ") seed " << s.seed << " stream " << s.stream;
  return os.str();
}

// cos theta values of a real-structure spectrum, sorted ascending: each
// conjugate pair contributes one value twice, so consecutive entries pair up.
// An odd-dimensional SO matrix carries one extra eigenvalue 1, which is the
// maximum and therefore lands last.
void angles_from_cosines(const Eigen::VectorXd& cosines, std::vector<double>& out) {
  const Eigen::Index d = cosines.size();
  out.clear();
  out.reserve(d);
  Eigen::Index i = 0;
  for (; i + 1 < d; i += 2) {
    const double c = std::clamp(0.5 * (cosines(i) + cosines(i + 1)), -1.0, 1.0);
    const double theta = std::acos(c);
    out.push_back(theta);
    out.push_back(-theta);
  }
  if (i < d) out.push_back(0.0);
  for (double& a : out) a = wrap_angle(a);
  std::sort(out.begin(), out.end());
}

}  // namespace

SpectralSample eigenangles(const MatrixSample& m, SpectralMethod method) {
  SpectralSample s = shell(m);
  const bool paired = m.group != Group::Unitary;
  if (paired && method == SpectralMethod::Automatic) {
    if (m.group == Group::SpecialOrthogonal) {
      const Eigen::MatrixXd re = m.entries.real();
      const Eigen::MatrixXd h = 0.5 * (re + re.transpose());
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h, Eigen::EigenvaluesOnly);
      if (es.info() != Eigen::Success)
        throw IntegrityError("eigensolver did not converge for " + m.provenance());
      angles_from_cosines(es.eigenvalues(), s.angles);
    } else {
      const Eigen::MatrixXcd h = 0.5 * (m.entries + m.entries.adjoint());
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
      if (es.info() != Eigen::Success)
        throw IntegrityError("eigensolver did not converge for " + m.provenance());
      angles_from_cosines(es.eigenvalues(), s.angles);
    }
    return s;
  }

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m.entries, false);
  if (es.info() != Eigen::Success)
    throw IntegrityError("eigensolver did not converge for " + m.provenance());
  const auto& values = es.eigenvalues();
  s.angles.reserve(values.size());
  for (Eigen::Index k = 0; k < values.size(); ++k) {
    if (std::abs(std::abs(values(k)) - 1.0) > kModulusTolerance) {
      std::ostringstream os;
      os << "eigenvalue off the unit circle (|lambda| = " << std::abs(values(k)) << ") for "
         << m.provenance();
      throw IntegrityError(os.str());
    }
    s.angles.push_back(wrap_angle(std::arg(values(k))));
  }
  std::sort(s.angles.begin(), s.angles.end());
  return s;
}

std::complex<double> trace_power(const SpectralSample& s, int j) {
  if (j == 0) return static_cast<double>(s.dimension());
  std::complex<double> sum = 0.0;
  for (double theta : s.angles) sum += std::polar(1.0, j * theta);
  if (s.group != Group::Unitary) {
    if (std::abs(sum.imag()) > kImaginaryTolerance) {
      std::ostringstream os;
      os << "Tr(M^" << j << ") has imaginary part " << sum.imag() << " for " << where(s);
      throw IntegrityError(os.str());
    }
    return sum.real();
  }
  return sum;
}

std::vector<std::complex<double>> trace_powers(const SpectralSample& s, int max_power) {
  std::vector<std::complex<double>> out(std::max(max_power, 0), 0.0);
  for (double theta : s.angles) {
    const std::complex<double> z = std::polar(1.0, theta);
    std::complex<double> w = z;
    for (int j = 0; j < max_power; ++j) {
      out[j] += w;
      w *= z;
    }
  }
  return out;
}

std::vector<std::complex<double>> trace_powers_direct(const MatrixSample& m, int max_power) {
  std::vector<std::complex<double>> out;
  out.reserve(std::max(max_power, 0));
  Eigen::MatrixXcd power = m.entries;
  for (int j = 1; j <= max_power; ++j) {
    if (j > 1) power = power * m.entries;
    out.push_back(power.trace());
  }
  return out;
}

double conjugate_asymmetry(const SpectralSample& s) {
  // Negation reverses the sorted order; angles near +-pi are compared on the circle.
  const std::size_t d = s.angles.size();
  double worst = 0.0;
  for (std::size_t k = 0; k < d; ++k) {
    const double a = s.angles[k];
    const double b = -s.angles[d - 1 - k];
    double gap = std::abs(a - b);
    gap = std::min(gap, 2.0 * std::numbers::pi - gap);
    worst = std::max(worst, gap);
  }
  return worst;
}

}  // namespace traceclt::ensembles
