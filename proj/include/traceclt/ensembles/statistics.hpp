#pragma once

#include <complex>
#include <span>
#include <vector>

#include "traceclt/ensembles/spectrum.hpp"
#include "traceclt/stein/statistic.hpp"

namespace traceclt::ensembles {

/// W from the trace Tr(M^j) of a matrix with group parameter n.
double statistic_from_trace(const stein::StatisticSpec& spec, std::complex<double> trace);

/// Throws GroupMismatch when the sample belongs to another family.
double statistic_W(const stein::StatisticSpec& spec, const SpectralSample& s);

/// Standard normal CDF via erfc, so the lower tail keeps full relative accuracy.
double normal_cdf(double x);

/// Exact one-sample Kolmogorov distance to N(0, 1). Takes a copy to sort.
double ks_distance(std::vector<double> samples);
/// Same statistic on an already sorted buffer.
double ks_distance_sorted(std::span<const double> sorted);

struct RunningMoments {
  std::size_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void push(double x);
  /// Unbiased sample variance; 0 for a single observation.
  double variance() const;
};

struct EmpiricalMoment {
  std::complex<double> mean;
  double se_real = 0.0;
  double se_imag = 0.0;
  std::size_t count = 0;
};

/// Complex mean with separate real and imaginary standard errors.
EmpiricalMoment summarize(std::span<const std::complex<double>> values);

}  // namespace traceclt::ensembles
