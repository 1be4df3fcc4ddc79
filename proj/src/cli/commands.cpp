#include "traceclt/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <sstream>

#include "traceclt/ensembles/batch.hpp"
#include "traceclt/moments/moments.hpp"
#include "traceclt/stein/bound.hpp"
#include "traceclt/stein/lemmas.hpp"

namespace traceclt::cli {

namespace {

void emit(const std::string& out, const std::string& content) {
  if (out.empty())
    std::cout << content << std::flush;
  else
    write_atomic(out, content);
}

bool run_oracle_checks(const ensembles::SampleBatch& batch, int max_weight, double se_tol, std::ostream& log) {
  const Group g = batch.config.group;
  int checked = 0, failed = 0;
  for (const Monomial& m : moments::monomials_up_to_weight(g, max_weight)) {
    const auto est = ensembles::empirical_moment(batch, m);
    if (!est.within_validity) continue;
    const auto oracle = moments::moment(moments::MomentQuery::from_monomial(g, m));
    const double target = oracle.value.get_d();
    const auto& e = est.estimate;
    const double dr = std::abs(e.mean.real() - target);
    const double di = std::abs(e.mean.imag());
    ++checked;
    const bool ok = dr <= se_tol * e.se_real + 1e-12 && di <= se_tol * e.se_imag + 1e-12;
    if (!ok) {
      ++failed;
      log << "oracle mismatch " << m.to_string() << ": mean " << e.mean.real() << "+" << e.mean.imag()
          << "i, oracle " << target << ", se " << e.se_real << "\n";
    }
  }
  log << "oracle checks: " << checked - failed << "/" << checked << " monomials within " << se_tol
      << " SE\n";
  return failed == 0;
}

}  // namespace

int cmd_verify(Group g, int j_max, const std::string& out, std::ostream& log, int j_limit) {
  if (j_max < 1 || j_max > j_limit) {
    log << "jmax must lie in 1.." << j_limit << "\n";
    return kExitUsage;
  }
  const auto reports = stein::run_lemma_suite(g, j_max);
  emit(out, emit_verify_report(g, j_max, reports));
  std::size_t exact = 0;
  for (const auto& r : reports) {
    if (r.status == stein::LemmaStatus::ExactMatch) {
      ++exact;
      continue;
    }
    log << r.lemma << " " << group_tag(g) << " j=" << r.j << ": " << r.detail << "\n";
  }
  log << group_tag(g) << " j<=" << j_max << ": " << exact << "/" << reports.size() << " exact\n";
  return exact == reports.size() ? kExitOk : kExitVerificationFailure;
}

int cmd_bound(Group g, int j, int n, std::ostream& log) {
  if (j < 1 || n < 1) {
    log << "bound needs j >= 1 and n >= 1\n";
    return kExitUsage;
  }
  const stein::StatisticSpec spec{g, j};
  const stein::SteinBound b = stein::stein_bound(spec, n);
  log << "group " << group_tag(g) << "\nj " << j << "\nn " << n << "\n";
  if (b.trivial) {
    log << "regime trivial (n below " << stein::stein_threshold(spec) << ")\n";
  } else {
    log << "term1 " << format_double(b.term1) << "  = " << b.term1_symbolic.to_string() << "\n"
        << "term2 " << format_double(b.term2) << "  = " << b.term2_symbolic.to_string() << "\n"
        << "term3 0\n";
  }
  log << "total " << format_double(b.total) << "\n";
  if (!b.trivial) log << "constant " << format_double(b.explicit_constant) << "  (total * n / j)\n";
  if (b.quoted_term2) log << "quoted_term2 " << format_double(*b.quoted_term2) << "  (19j/(2n))\n";
  if (b.reference)
    log << "reference " << format_double(*b.reference) << "  (22j/n, total "
        << (b.total <= *b.reference ? "within" : "above") << ")\n";
  return kExitOk;
}

ExperimentReport run_sample(const ExperimentConfig& config, std::ostream& log, bool& oracle_ok,
                            std::string* raw_export) {
  for (const auto& w : validate(config)) log << "warning: " << w << "\n";
  ensembles::BatchConfig bc;
  bc.group = config.group;
  bc.n = config.n;
  bc.samples = config.samples;
  bc.seed = config.seed;
  bc.threads = config.threads;
  bc.cross_check = config.matrix_power_check;
  const int max_j = *std::max_element(config.j.begin(), config.j.end());
  const int oracle_weight = config.oracle_checks ? 6 : 0;
  bc.max_power = std::max(max_j, oracle_weight);

  const ensembles::SampleBatch batch = ensembles::run_batch(bc);
  oracle_ok = true;
  if (config.oracle_checks) oracle_ok = run_oracle_checks(batch, oracle_weight, config.tolerances.moment_se, log);

  ExperimentReport report;
  report.header = run_header(config);
  std::ostringstream raw;
  if (raw_export) raw << "index,seed,j,W\n";
  for (int j : config.j) {
    const stein::StatisticSpec spec{config.group, j};
    const auto stats = ensembles::batch_stats(batch, j);
    const auto bound = stein::stein_bound(spec, config.n);
    const auto norm = stein::normalization(spec);
    const double scale = stein::build_W(spec).scale();
    const mpq_class n_value(config.n);
    const double mean_scaled = norm.mean_scaled.t_coefficient(0).evaluate_n(n_value).coefficient(0, 0).get_d();
    const double second = norm.second_moment.t_coefficient(0).evaluate_n(n_value).coefficient(0, 0).get_d();

    ExperimentRow row;
    row.group = config.group;
    row.n = config.n;
    row.j = j;
    row.N = stats.count;
    row.seed = config.seed;
    row.ks = ensembles::ks_distance(stats);
    row.bound_term1 = bound.term1;
    row.bound_term2 = bound.term2;
    row.bound_total = bound.total;
    row.mean_W = stats.mean();
    row.var_W = stats.variance();
    row.oracle_mean = mean_scaled / scale;
    row.oracle_var = second - row.oracle_mean * row.oracle_mean;
    row.reference = bound.reference;
    row.pass = row_passes(row, config.tolerances);
    if (norm.min_n > config.n)
      log << "warning: j = " << j << " oracle moments need n >= " << norm.min_n << "\n";
    report.rows.push_back(row);

    if (raw_export) {
      const auto w = ensembles::statistic_values(batch, j);
      for (std::size_t i = 0; i < w.size(); ++i)
        raw << i << ',' << config.seed << ',' << j << ',' << format_double(w[i]) << "\n";
    }
  }
  if (raw_export) *raw_export = raw.str();
  return report;
}

int cmd_sample(const ExperimentConfig& config, std::ostream& log) {
  bool oracle_ok = true;
  std::string raw;
  const bool want_raw = config.export_raw;
  if (want_raw && config.out.empty()) {
    log << "raw sample export needs --out\n";
    return kExitUsage;
  }
  const ExperimentReport report = run_sample(config, log, oracle_ok, want_raw ? &raw : nullptr);
  emit(config.out, emit_report(report));
  if (want_raw) write_atomic(config.out + ".samples.csv", raw);
  bool all = oracle_ok;
  for (const auto& row : report.rows) {
    log << group_tag(row.group) << "(" << row.n << ") j=" << row.j << " ks " << format_double(row.ks)
        << " bound " << format_double(row.bound_total) << " mean " << format_double(row.mean_W)
        << " var " << format_double(row.var_W) << (row.pass ? " pass" : " FAIL") << "\n";
    all = all && row.pass;
  }
  return all ? kExitOk : kExitVerificationFailure;
}

int cmd_report_merge(const std::vector<std::string>& paths, const std::string& out, std::ostream& log) {
  if (paths.empty()) {
    log << "report-merge needs at least one input\n";
    return kExitUsage;
  }
  std::vector<ExperimentReport> inputs;
  inputs.reserve(paths.size());
  for (const auto& p : paths) inputs.push_back(read_report(p));
  const ExperimentReport merged = merge_reports(inputs);
  emit(out, emit_report(merged));
  log << "merged " << paths.size() << " report(s), " << merged.rows.size() << " row(s)\n";
  return kExitOk;
}

}  // namespace traceclt::cli
