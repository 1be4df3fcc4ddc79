#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "traceclt/ensembles/spectrum.hpp"
#include "traceclt/ensembles/statistics.hpp"
#include "traceclt/symfunc/power_sum.hpp"

namespace traceclt::ensembles {

/// Worker count from TRACECLT_THREADS when requested == 0, else hardware
/// concurrency; never more than the number of samples.
unsigned resolve_threads(unsigned requested, std::size_t samples);

inline constexpr const char* kThreadsEnv = "TRACECLT_THREADS";

struct BatchConfig {
  Group group = Group::Unitary;
  int n = 1;
  std::size_t samples = 1;
  std::uint64_t seed = 0;
  int max_power = 1;  // traces Tr(M^1..max_power) are kept per sample
  unsigned threads = 0;
  SpectralMethod method = SpectralMethod::Automatic;
  bool check_membership = true;
  /// Recompute every trace by matrix powers and, for SO/USp, redo the
  /// eigensolve on the general path; disagreement beyond 1e-8 is an error.
  bool cross_check = false;
  MembershipTolerance tolerance{};
};

/// Per-sample trace table. Sample i is drawn from PhiloxStream(seed, i), so the
/// table does not depend on the worker count.
struct SampleBatch {
  BatchConfig config;
  std::vector<std::complex<double>> traces;  // row-major, samples x max_power
  MembershipResiduals worst_residuals;
  double worst_cross_check = 0.0;

  std::size_t size() const { return config.samples; }
  /// Tr(M^j) of sample i; j < 0 gives the conjugate, j = 0 the dimension.
  std::complex<double> trace(std::size_t i, int j) const;
};

SampleBatch run_batch(const BatchConfig& config);

/// W for every sample in index order.
std::vector<double> statistic_values(const SampleBatch& batch, int j);

struct BatchStats {
  Group group = Group::Unitary;
  int n = 0;
  int j = 1;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  RunningMoments moments;
  std::vector<double> sorted;

  double mean() const { return moments.mean; }
  double variance() const { return moments.variance(); }
};

BatchStats batch_stats(const SampleBatch& batch, int j);
double ks_distance(const BatchStats& stats);

struct MonomialEstimate {
  EmpiricalMoment estimate;
  /// false when the monomial's weight exceeds what the closed-form moments
  /// cover at this n; the estimate is still returned.
  bool within_validity = true;
};

/// Sample mean of a trace monomial. Throws std::invalid_argument when the
/// monomial needs a power beyond the batch's max_power.
MonomialEstimate empirical_moment(const SampleBatch& batch, const Monomial& m);

}  // namespace traceclt::ensembles
