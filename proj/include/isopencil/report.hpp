#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isopencil/lax.hpp"
#include "isopencil/matrix.hpp"
#include "isopencil/numrange.hpp"
#include "isopencil/symmetry.hpp"
#include "isopencil/word_trace.hpp"

namespace isopencil {

struct AnalysisConfig {
  int samples = kDefaultSamples;
  double tol = kRangeTol;  // direct spectral check, disk tests, nilpotency
  double word_tol = kWordTol;
  double rank_tol = kRankRelTol;
  double commutator_tol = kCommutatorTol;
};

struct LaxSummary {
  int steps = 0;
  double max_similarity_error = 0.0;
  double max_unitarity_error = 0.0;
};

/// Margin statistics behind each verdict. A verdict is decisive when its
/// statistic is at most tol / 10 or at least 10 tol.
struct AnalysisMargins {
  double nilpotency_defect = 0.0;
  double direct_deviation = 0.0;
  double word_statistic = 0.0;
  double disk_statistic = 0.0;
  double rank_margin_decades = 0.0;
  bool decisive = false;
};

struct AnalysisReport {
  std::string input_digest;
  int n = 0;
  bool nilpotent = false;
  bool thm1_direct = false;
  bool thm1_word = false;
  bool thm1_range = false;
  std::vector<std::pair<int, int>> thm1_word_violations;
  bool thm32_exists = false;
  double thm32_residual = 0.0;
  std::vector<std::optional<double>> radii;  // k = 1..ceil(n/2); empty optional = EMPTY
  bool rank_constant = false;
  std::optional<LaxSummary> lax_summary;
  AnalysisConfig tolerances;
  AnalysisMargins margins;
};

/// Statistic s against threshold tol is decisive when s <= tol/10 or s >= 10 tol.
bool decisive(double statistic, double tol);

AnalysisReport run_analyze(const ComplexMatrix& b, const AnalysisConfig& config = {});

/// Report as JSON with sorted keys.
nlohmann::json to_json(const AnalysisReport& report);

nlohmann::json matrix_to_json(const ComplexMatrix& m);
nlohmann::json trajectory_to_json(const LaxTrajectory& traj);

}  // namespace isopencil
