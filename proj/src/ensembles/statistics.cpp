#include "traceclt/ensembles/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace traceclt::ensembles {

double statistic_from_trace(const stein::StatisticSpec& spec, std::complex<double> trace) {
  const double j = spec.j;
  const bool even = spec.j % 2 == 0;
  switch (spec.group) {
    case Group::SpecialOrthogonal:
      return (trace.real() - (even ? 1.0 : 0.0)) / std::sqrt(j);
    case Group::UnitarySymplectic:
      return (trace.real() + (even ? 1.0 : 0.0)) / std::sqrt(j);
    case Group::Unitary:
      return 2.0 * trace.real() / std::sqrt(2.0 * j);
  }
  return 0.0;
}

double statistic_W(const stein::StatisticSpec& spec, const SpectralSample& s) {
  if (spec.group != s.group)
    throw GroupMismatch("statistic for " + std::string(group_tag(spec.group)) + " applied to a " +
                        std::string(group_tag(s.group)) + " sample");
  return statistic_from_trace(spec, trace_power(s, spec.j));
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x * std::numbers::sqrt2 / 2.0); }

double ks_distance_sorted(std::span<const double> sorted) {
  const double N = static_cast<double>(sorted.size());
  double sup = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double F = normal_cdf(sorted[i]);
    sup = std::max({sup, std::abs((i + 1) / N - F), std::abs(i / N - F)});
  }
  return sup;
}

double ks_distance(std::vector<double> samples) {
  std::sort(samples.begin(), samples.end());
  return ks_distance_sorted(samples);
}

void RunningMoments::push(double x) {
  ++count;
  const double delta = x - mean;
  mean += delta / static_cast<double>(count);
  m2 += delta * (x - mean);
}

double RunningMoments::variance() const {
  return count > 1 ? m2 / static_cast<double>(count - 1) : 0.0;
}

EmpiricalMoment summarize(std::span<const std::complex<double>> values) {
  RunningMoments re, im;
  for (const auto& v : values) {
    re.push(v.real());
    im.push(v.imag());
  }
  EmpiricalMoment out;
  out.count = values.size();
  out.mean = {re.mean, im.mean};
  if (out.count > 0) {
    const double N = static_cast<double>(out.count);
    out.se_real = std::sqrt(re.variance() / N);
    out.se_imag = std::sqrt(im.variance() / N);
  }
  return out;
}

}  // namespace traceclt::ensembles
