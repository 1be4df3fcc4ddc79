#include "traceclt/stein/suite.hpp"

#include <stdexcept>

#include "traceclt/stein/lemmas.hpp"
#include "traceclt/stein/target_forms.hpp"
#include "traceclt/symfunc/laplacian.hpp"

namespace traceclt::stein {

namespace {

LemmaReport make(std::string id, const StatisticSpec& spec, PowerSumPoly residual, int min_n,
                 std::string detail) {
  LemmaReport r;
  r.lemma = std::move(id);
  r.group = spec.group;
  r.j = spec.j;
  r.status = residual.is_zero() ? LemmaStatus::ExactMatch : LemmaStatus::Residual;
  r.residual = std::move(residual);
  r.min_n = min_n;
  r.detail = std::move(detail);
  return r;
}

PowerSumPoly scalar(Group g, const CoeffPoly& c) {
  const int order = c.truncation_order() == CoeffPoly::kUntruncated ? 2 : c.truncation_order();
  return PowerSumPoly::constant(g, c, order);
}

}  // namespace

LemmaReport check_drift(const StatisticSpec& spec) {
  const ScaledStatistic w = build_W(spec);
  const Drift d = conditional_drift(spec);
  const CoeffPoly a = target::drift_rate(spec) * CoeffPoly::t(1);
  PowerSumPoly residual =
      heat_first_order(w.scaled) - w.scaled + w.scaled * a - target::remainder_scaled(spec);
  return make("cond1", spec, residual, 1, "a = " + d.a.to_string());
}

LemmaReport check_square_increment(const StatisticSpec& spec) {
  PowerSumPoly computed = conditional_square_increment(spec);
  return make("cond2", spec, computed - target::square_increment(spec), 1,
              "E[(W'-W)^2|M] = " + computed.to_string());
}

LemmaReport check_variance(const StatisticSpec& spec) {
  const SymbolicValue v = variance_coefficient(spec);
  return make("var", spec, scalar(spec.group, v.value - target::variance(spec)), v.min_n,
              "Var = " + v.value.to_string());
}

LemmaReport check_second_moment(const StatisticSpec& spec) {
  const SymbolicValue v = second_moment_increment(spec);
  return make("low1", spec, scalar(spec.group, v.value - target::second_moment_increment(spec)),
              v.min_n, "E(W'-W)^2 = " + v.value.to_string());
}

LemmaReport check_fourth_moment(const StatisticSpec& spec) {
  const SymbolicValue v = fourth_moment_expansion(spec);
  return make("low4", spec, scalar(spec.group, v.value), v.min_n,
              "E(W'-W)^4 through order t = " + v.value.to_string());
}

LemmaReport check_remainder(const StatisticSpec& spec) {
  const SymbolicValue v = r_second_moment(spec);
  const Rational computed = v.value.coefficient(0, 2);
  const Rational ceiling = target::r_second_moment_ceiling(spec);
  std::string detail = "E[R^2] = " + v.value.to_string() + "; ceiling " + ceiling.get_str() +
                       "*t^2 " + (computed <= ceiling ? "holds" : "violated");
  if (auto quoted = target::r_second_moment_quoted(spec)) {
    detail += "; quoted " + quoted->to_string();
    return make("boundR", spec, scalar(spec.group, v.value - *quoted), v.min_n, detail);
  }
  CoeffPoly excess = computed <= ceiling ? CoeffPoly(0, 2)
                                         : (v.value - CoeffPoly::monomial(ceiling, 0, 2, 2));
  return make("boundR", spec, scalar(spec.group, excess), v.min_n, detail);
}

std::vector<LemmaReport> run_lemma_suite(Group group, int j_max) {
  if (j_max < 1) throw std::invalid_argument("run_lemma_suite: j_max must be >= 1");
  std::vector<LemmaReport> out;
  out.reserve(static_cast<std::size_t>(j_max) * lemma_ids().size());
  for (int j = 1; j <= j_max; ++j) {
    const StatisticSpec spec{group, j};
    out.push_back(check_drift(spec));
    out.push_back(check_square_increment(spec));
    out.push_back(check_variance(spec));
    out.push_back(check_second_moment(spec));
    out.push_back(check_fourth_moment(spec));
    out.push_back(check_remainder(spec));
  }
  return out;
}

bool all_exact(const std::vector<LemmaReport>& reports) {
  for (const auto& r : reports)
    if (r.status != LemmaStatus::ExactMatch) return false;
  return true;
}

}  // namespace traceclt::stein
