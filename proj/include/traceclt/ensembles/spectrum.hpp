#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "traceclt/ensembles/sampler.hpp"

namespace traceclt::ensembles {

struct SpectralSample {
  std::vector<double> angles;  // sorted, each in (-pi, pi]
  Group group = Group::Unitary;
  int n = 0;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  int dimension() const { return static_cast<int>(angles.size()); }
};

enum class SpectralMethod {
  /// Hermitian-part solve for SO/USp, complex Schur for U.
  Automatic,
  /// Complex Schur for every group; slower, used for cross-checks.
  GeneralSchur,
};

/// Eigenangles of a group element. For SO/USp the eigenvalues pair up as
/// e^{+-i theta}, so the spectrum of (M + M^*)/2 (values cos theta, each twice)
/// determines it; the general path instead solves M directly and checks that
/// every eigenvalue sits within 1e-8 of the unit circle.
SpectralSample eigenangles(const MatrixSample& m, SpectralMethod method = SpectralMethod::Automatic);

/// sum_k e^{i j theta_k}; negative j gives the conjugate power.
/// For SO/USp the imaginary part is checked against 1e-8 and dropped.
std::complex<double> trace_power(const SpectralSample& s, int j);

/// Tr(M^j) for j = 1..max_power in one sweep over the angles, without the
/// SO/USp imaginary-part check.
std::vector<std::complex<double>> trace_powers(const SpectralSample& s, int max_power);

/// Tr(M^j) by repeated multiplication; the slow reference path.
std::vector<std::complex<double>> trace_powers_direct(const MatrixSample& m, int max_power);

/// Largest distance between the sorted angle multiset and its negation.
double conjugate_asymmetry(const SpectralSample& s);

}  // namespace traceclt::ensembles
