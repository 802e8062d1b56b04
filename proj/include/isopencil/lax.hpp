#pragma once

#include <vector>

#include "isopencil/matrix.hpp"

namespace isopencil {

inline constexpr double kLaxTol = 1e-8;
inline constexpr int kDefaultLaxSteps = 2000;

/// L(t) = Re(e^{-it} B) and L'(t) = -Re B sin t + Im B cos t = L(t + pi/2).
ComplexMatrix lax_L(const ComplexMatrix& b, double t);
ComplexMatrix lax_L_dot(const ComplexMatrix& b, double t);

struct LaxGeneratorFit {
  ComplexMatrix P;
  double residual = 0.0;  // ||[P, L(t)] - L'(t)||_F
};

/// Minimum-norm skew-adjoint least-squares solution of [P, L(t)] = L'(t).
LaxGeneratorFit fit_lax_generator(const ComplexMatrix& b, double t);

/// As fit_lax_generator, but throws ResidualTooLarge when the residual exceeds
/// tol (1 + ||B||_F), which means the pencil is not isospectral.
ComplexMatrix solve_P(const ComplexMatrix& b, double t, double tol = kLaxTol);

struct LaxTrajectory {
  std::vector<double> t_grid;  // 0 .. 2 pi, steps + 1 points
  std::vector<ComplexMatrix> P_samples;
  std::vector<ComplexMatrix> U_samples;
  double max_similarity_error = 0.0;  // max_j ||U_j L(0) U_j^* - L(t_j)||_F
  double max_unitarity_error = 0.0;   // max_j ||U_j^* U_j - I||_F
};

/// Classical RK4 for U' = P(t) U, U(0) = I on [0, 2 pi] with h = 2 pi / steps,
/// followed by a polar re-unitarization after every step.
LaxTrajectory integrate_U(const ComplexMatrix& b, int steps = kDefaultLaxSteps,
                          double tol = kLaxTol);

bool verify_lax(const ComplexMatrix& b, const LaxTrajectory& traj, double tol);

/// Nearest unitary (polar factor) of a nearly unitary matrix.
ComplexMatrix nearest_unitary(const ComplexMatrix& u);

/// Eigenvector matrices of L(t) on t_grid; columns follow descending
/// eigenvalues and keep a continuous phase along the grid.
/// Throws DegenerateSpectrum when an eigenvalue gap drops below
/// 1e-8 (1 + ||B||_F).
std::vector<ComplexMatrix> eigenpath_V(const ComplexMatrix& b, const std::vector<double>& t_grid);

}  // namespace isopencil
