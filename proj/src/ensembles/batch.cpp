#include "traceclt/ensembles/batch.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <limits>
#include <sstream>
#include <string>
#include <thread>

#include "traceclt/moments/moments.hpp"

namespace traceclt::ensembles {

namespace {

constexpr double kCrossCheckTolerance = 1e-8;

void validate(const BatchConfig& c) {
  if (c.n < 1) throw std::invalid_argument("batch needs n >= 1");
  if (c.samples < 1) throw std::invalid_argument("batch needs at least one sample");
  if (c.max_power < 1) throw std::invalid_argument("batch needs max_power >= 1");
}

void absorb(MembershipResiduals& into, const MembershipResiduals& r) {
  into.unitarity = std::max(into.unitarity, r.unitarity);
  into.imaginary = std::max(into.imaginary, r.imaginary);
  into.determinant = std::max(into.determinant, r.determinant);
  into.symplectic = std::max(into.symplectic, r.symplectic);
}

struct WorkerResult {
  MembershipResiduals worst;
  double cross = 0.0;
  std::size_t failed_at = std::numeric_limits<std::size_t>::max();
  std::exception_ptr error;
};

double cross_check(const MatrixSample& m, const std::complex<double>* row, int max_power) {
  double worst = 0.0;
  const auto direct = trace_powers_direct(m, max_power);
  for (int j = 0; j < max_power; ++j) worst = std::max(worst, std::abs(direct[j] - row[j]));
  if (m.group != Group::Unitary) {
    const SpectralSample general = eigenangles(m, SpectralMethod::GeneralSchur);
    worst = std::max(worst, conjugate_asymmetry(general));
    const auto alt = trace_powers(general, max_power);
    for (int j = 0; j < max_power; ++j) worst = std::max(worst, std::abs(alt[j] - row[j]));
  }
  if (worst > kCrossCheckTolerance) {
    std::ostringstream os;
    os << "trace cross-check disagreement " << worst << " for " << m.provenance();
    throw IntegrityError(os.str());
  }
  return worst;
}

void work(const BatchConfig& c, std::size_t begin, std::size_t end,
          std::vector<std::complex<double>>& traces, WorkerResult& out) {
  const auto width = static_cast<std::size_t>(c.max_power);
  for (std::size_t i = begin; i < end; ++i) {
    try {
      PhiloxStream rng(c.seed, i);
      const MatrixSample m = sample_haar(c.group, c.n, rng);
      if (c.check_membership) {
        const MembershipResiduals r = membership_residuals(m);
        absorb(out.worst, r);
        if (!r.within(c.group, c.tolerance)) require_membership(m, c.tolerance);
      }
      const SpectralSample s = eigenangles(m, c.method);
      const auto powers = trace_powers(s, c.max_power);
      std::complex<double>* row = traces.data() + i * width;
      for (std::size_t j = 0; j < width; ++j) {
        std::complex<double> v = powers[j];
        if (c.group != Group::Unitary) {
          if (std::abs(v.imag()) > 1e-8) {
            std::ostringstream os;
            os << "Tr(M^" << j + 1 << ") has imaginary part " << v.imag() << " for " << m.provenance();
            throw IntegrityError(os.str());
          }
          v = v.real();
        }
        row[j] = v;
      }
      if (c.cross_check) out.cross = std::max(out.cross, cross_check(m, row, c.max_power));
    } catch (...) {
      out.failed_at = i;
      out.error = std::current_exception();
      return;
    }
  }
}

}  // namespace

unsigned resolve_threads(unsigned requested, std::size_t samples) {
  unsigned t = requested;
  if (t == 0) {
    if (const char* env = std::getenv(kThreadsEnv); env != nullptr && *env != '\0') {
      try {
        const long v = std::stol(env);
        if (v > 0) t = static_cast<unsigned>(v);
      } catch (const std::exception&) {
        throw std::invalid_argument(std::string(kThreadsEnv) + " must be a positive integer, got '" +
                                    env + "'");
      }
    }
  }
  if (t == 0) t = std::max(1u, std::thread::hardware_concurrency());
  if (samples > 0 && t > samples) t = static_cast<unsigned>(samples);
  return std::max(1u, t);
}

std::complex<double> SampleBatch::trace(std::size_t i, int j) const {
  if (j == 0) return static_cast<double>(matrix_dimension(config.group, config.n));
  const int k = std::abs(j);
  if (k > config.max_power || i >= config.samples)
    throw std::out_of_range("trace index outside the batch");
  const std::complex<double> v = traces[i * config.max_power + (k - 1)];
  return j < 0 ? std::conj(v) : v;
}

SampleBatch run_batch(const BatchConfig& config) {
  validate(config);
  SampleBatch batch;
  batch.config = config;
  batch.traces.assign(config.samples * config.max_power, 0.0);

  const unsigned workers = resolve_threads(config.threads, config.samples);
  std::vector<WorkerResult> results(workers);
  const std::size_t chunk = (config.samples + workers - 1) / workers;
  auto range = [&](unsigned w) {
    const std::size_t b = std::min(config.samples, w * chunk);
    return std::pair{b, std::min(config.samples, b + chunk)};
  };

  if (workers == 1) {
    work(config, 0, config.samples, batch.traces, results[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      const auto [b, e] = range(w);
      pool.emplace_back(work, std::cref(config), b, e, std::ref(batch.traces), std::ref(results[w]));
    }
    for (auto& t : pool) t.join();
  }

  const WorkerResult* first_failure = nullptr;
  for (const auto& r : results) {
    absorb(batch.worst_residuals, r.worst);
    batch.worst_cross_check = std::max(batch.worst_cross_check, r.cross);
    if (r.error && (first_failure == nullptr || r.failed_at < first_failure->failed_at))
      first_failure = &r;
  }
  if (first_failure != nullptr) std::rethrow_exception(first_failure->error);
  return batch;
}

std::vector<double> statistic_values(const SampleBatch& batch, int j) {
  if (j < 1 || j > batch.config.max_power)
    throw std::invalid_argument("statistic power outside the batch's trace table");
  const stein::StatisticSpec spec{batch.config.group, j};
  std::vector<double> w(batch.size());
  for (std::size_t i = 0; i < batch.size(); ++i) w[i] = statistic_from_trace(spec, batch.trace(i, j));
  return w;
}

BatchStats batch_stats(const SampleBatch& batch, int j) {
  BatchStats s;
  s.group = batch.config.group;
  s.n = batch.config.n;
  s.j = j;
  s.count = batch.size();
  s.seed = batch.config.seed;
  s.sorted = statistic_values(batch, j);
  for (double w : s.sorted) s.moments.push(w);
  std::sort(s.sorted.begin(), s.sorted.end());
  return s;
}

double ks_distance(const BatchStats& stats) { return ks_distance_sorted(stats.sorted); }

MonomialEstimate empirical_moment(const SampleBatch& batch, const Monomial& m) {
  const Group g = batch.config.group;
  for (const auto& letter : m.letters()) {
    if (letter.index > batch.config.max_power)
      throw std::invalid_argument("monomial " + m.to_string() + " needs Tr(M^" +
                                  std::to_string(letter.index) + "), beyond the batch's traces");
    if (letter.conjugated && !has_conjugates(g))
      throw UnsupportedOperation("conjugated letter on a self-conjugate group");
  }
  std::vector<std::complex<double>> values(batch.size(), 1.0);
  for (std::size_t i = 0; i < batch.size(); ++i) {
    std::complex<double> prod = 1.0;
    for (const auto& letter : m.letters()) prod *= batch.trace(i, letter.conjugated ? -letter.index : letter.index);
    values[i] = prod;
  }
  MonomialEstimate out;
  out.estimate = summarize(values);
  out.within_validity = batch.config.n >= moments::minimum_dimension(g, m.weight());
  return out;
}

}  // namespace traceclt::ensembles
