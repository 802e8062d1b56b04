#include "isopencil/report.hpp"

#include <cmath>

#include "isopencil/errors.hpp"
#include "isopencil/io.hpp"

namespace isopencil {

using nlohmann::json;

bool decisive(double statistic, double tol) { return statistic <= 0.1 * tol || statistic >= 10.0 * tol; }

AnalysisReport run_analyze(const ComplexMatrix& b, const AnalysisConfig& config) {
  if (config.samples < 8) throw InvalidArgument("run_analyze: samples must be >= 8");
  if (!(config.tol > 0) || !(config.word_tol > 0) || !(config.rank_tol > 0) ||
      !(config.commutator_tol > 0))
    throw InvalidArgument("run_analyze: tolerances must be positive");

  AnalysisReport r;
  r.input_digest = sha256_hex(write_matrix(b));
  r.n = static_cast<int>(b.size());
  r.tolerances = config;

  r.margins.nilpotency_defect = nilpotency_defect(b);
  r.nilpotent = r.margins.nilpotency_defect <= config.tol;

  r.margins.direct_deviation = direct_spectral_deviation(b, config.samples);
  r.thm1_direct = r.margins.direct_deviation <= config.tol;

  const WordConditionReport words = check_condition_ii(b, config.word_tol);
  r.thm1_word = words.satisfied;
  r.thm1_word_violations = words.violations;
  r.margins.word_statistic = words.max_scaled;

  const ConditionIIIReport range = evaluate_condition_iii(b, config.samples, config.tol, config.rank_tol);
  r.thm1_range = range.satisfied;
  r.rank_constant = range.ranks.constant;
  for (const RangeProfile& p : range.profiles) r.radii.push_back(p.radius);
  r.margins.disk_statistic = range.disk_statistic;
  r.margins.rank_margin_decades = range.ranks.threshold_margin_decades;

  const CommutatorSolution k = solve_K(b, config.commutator_tol);
  r.thm32_exists = k.exists;
  r.thm32_residual = k.residual;

  r.margins.decisive = decisive(r.margins.direct_deviation, config.tol) &&
                       decisive(r.margins.word_statistic, config.word_tol) &&
                       decisive(r.margins.disk_statistic, config.tol) &&
                       r.margins.rank_margin_decades >= 1.0;
  return r;
}

namespace {

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace

json to_json(const AnalysisReport& r) {
  json radii = json::array();
  for (const auto& v : r.radii) radii.push_back(v ? json(*v) : json(nullptr));
  json violations = json::array();
  for (const auto& [k, l] : r.thm1_word_violations) violations.push_back({k, l});

  json lax = nullptr;
  if (r.lax_summary) {
    lax = {{"steps", r.lax_summary->steps},
           {"max_similarity_error", r.lax_summary->max_similarity_error},
           {"max_unitarity_error", r.lax_summary->max_unitarity_error}};
  }

  return {
      {"input_digest", r.input_digest},
      {"n", r.n},
      {"nilpotent", r.nilpotent},
      {"thm1_direct", r.thm1_direct},
      {"thm1_word", r.thm1_word},
      {"thm1_range", r.thm1_range},
      {"thm1_word_violations", violations},
      {"thm32_exists", r.thm32_exists},
      {"thm32_residual", r.thm32_residual},
      {"radii", radii},
      {"rank_constant", r.rank_constant},
      {"lax_summary", lax},
      {"tolerances",
       {{"samples", r.tolerances.samples},
        {"tol", r.tolerances.tol},
        {"word_tol", r.tolerances.word_tol},
        {"rank_tol", r.tolerances.rank_tol},
        {"commutator_tol", r.tolerances.commutator_tol}}},
      {"margins",
       {{"nilpotency_defect", r.margins.nilpotency_defect},
        {"direct_deviation", r.margins.direct_deviation},
        {"word_statistic", r.margins.word_statistic},
        {"disk_statistic", r.margins.disk_statistic},
        {"rank_margin_decades", finite_or_null(r.margins.rank_margin_decades)},
        {"decisive", r.margins.decisive}}},
  };
}

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return {{"n", m.size()}, {"rows", std::move(rows)}};
}

json trajectory_to_json(const LaxTrajectory& traj) {
  json p = json::array();
  json u = json::array();
  for (const auto& m : traj.P_samples) p.push_back(matrix_to_json(m)["rows"]);
  for (const auto& m : traj.U_samples) u.push_back(matrix_to_json(m)["rows"]);
  return {{"steps", traj.t_grid.empty() ? 0 : traj.t_grid.size() - 1},
          {"t_grid", traj.t_grid},
          {"max_similarity_error", traj.max_similarity_error},
          {"max_unitarity_error", traj.max_unitarity_error},
          {"P", std::move(p)},
          {"U", std::move(u)}};
}

}  // namespace isopencil
