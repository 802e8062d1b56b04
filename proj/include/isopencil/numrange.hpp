#pragma once

#include <optional>
#include <vector>

#include "isopencil/matrix.hpp"

namespace isopencil {

inline constexpr int kDefaultSamples = 720;
inline constexpr double kRangeTol = 1e-8;

/// Equispaced angles 2 pi j / samples, j = 0..samples-1.
std::vector<double> angle_grid(int samples);

/// Descending spectra of H(theta_j) on the angle grid.
std::vector<std::vector<double>> spectra_on_grid(const ComplexMatrix& b, int samples);

/// Support-function samples of the rank-k numerical range.
struct RangeProfile {
  int k = 0;
  std::vector<double> thetas;
  std::vector<double> support;  // lambda_k(H(theta_j))
  /// Disk radius when is_disk_at_zero; otherwise max(0, min support). Empty
  /// optional when the half-plane intersection is empty.
  std::optional<double> radius;
  bool is_disk_at_zero = false;
  /// max(max - min, -min) of the support, divided by (1 + ||B||_F).
  double disk_statistic = 0.0;
  double tol_used = 0.0;
};

struct RankProfile {
  std::vector<double> thetas;
  std::vector<int> ranks;
  bool constant = true;
  /// Smallest distance, in decades, between any |lambda|/|lambda|_max and the
  /// rank threshold. Values >= 1 mean the rank decision is robust.
  double threshold_margin_decades = 0.0;
};

RangeProfile support_sweep(const ComplexMatrix& b, int k, int samples = kDefaultSamples,
                           double tol = kRangeTol);

/// Counterclockwise vertices of the outer polygon
/// {z : Re(e^{-i theta_j} z) <= lambda_k(H(theta_j)) for all j}.
/// Empty when the intersection is empty.
std::vector<cplx> range_polygon(const ComplexMatrix& b, int k, int samples = kDefaultSamples);

RankProfile rank_sweep(const ComplexMatrix& b, int samples = kDefaultSamples,
                       double rel_tol = kRankRelTol);

/// max_j max_i |lambda_i(H(theta_j)) - lambda_i(H(0))| / (1 + ||B||_F).
double direct_spectral_deviation(const ComplexMatrix& b, int samples = kDefaultSamples);

bool isospectral_check_direct(const ComplexMatrix& b, int samples = kDefaultSamples,
                              double tol = kRangeTol);

struct ConditionIIIReport {
  std::vector<RangeProfile> profiles;  // k = 1..ceil(n/2)
  RankProfile ranks;
  double disk_statistic = 0.0;  // worst over profiles
  bool satisfied = false;
};

ConditionIIIReport evaluate_condition_iii(const ComplexMatrix& b, int samples = kDefaultSamples,
                                          double tol = kRangeTol, double rank_tol = kRankRelTol);

bool check_condition_iii(const ComplexMatrix& b, int samples = kDefaultSamples,
                         double tol = kRangeTol);

/// Nilpotent and numerical range a disk at 0. Throws DimensionTooLarge for n > 4.
bool check_corollary_small_n(const ComplexMatrix& b, int samples = kDefaultSamples,
                             double tol = kRangeTol);

}  // namespace isopencil
