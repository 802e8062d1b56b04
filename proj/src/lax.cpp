#include "isopencil/lax.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "isopencil/eigen.hpp"
#include "isopencil/errors.hpp"
#include "isopencil/lstsq.hpp"
#include "isopencil/kernels.hpp"

namespace isopencil {
namespace {

constexpr int kMaxPolarIterations = 10;

// Scale the column so that its largest-magnitude entry is real positive.
void normalize_phase(ComplexMatrix& v, std::size_t col) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (std::abs(v(i, col)) > std::abs(v(best, col))) best = i;
  const cplx z = v(best, col);
  if (z == cplx{}) return;
  const cplx f = std::conj(z) / std::abs(z);
  for (std::size_t i = 0; i < v.size(); ++i) v(i, col) *= f;
}

}  // namespace

ComplexMatrix lax_L(const ComplexMatrix& b, double t) { return hermitian_part(b, t); }

ComplexMatrix lax_L_dot(const ComplexMatrix& b, double t) {
  return hermitian_part(b, t + 0.5 * std::numbers::pi);
}

LaxGeneratorFit fit_lax_generator(const ComplexMatrix& b, double t) {
  SkewCommutatorFit fit = fit_skew_commutator(lax_L(b, t), lax_L_dot(b, t));
  return {std::move(fit.x), fit.residual};
}

ComplexMatrix solve_P(const ComplexMatrix& b, double t, double tol) {
  if (!(tol > 0)) throw InvalidArgument("solve_P: tol must be positive");
  LaxGeneratorFit fit = fit_lax_generator(b, t);
  if (fit.residual > tol * (1.0 + b.frobenius_norm())) {
    throw ResidualTooLarge("solve_P: Lax equation residual " + std::to_string(fit.residual) +
                           " at t = " + std::to_string(t) + "; the pencil is not isospectral");
  }
  return std::move(fit.P);
}

ComplexMatrix nearest_unitary(const ComplexMatrix& u) {
  // Newton-Schulz: X <- X (3I - X^* X) / 2 converges quadratically to the polar factor.
  const std::size_t n = u.size();
  const ComplexMatrix eye = ComplexMatrix::identity(n);
  ComplexMatrix x = u;
  for (int it = 0; it < kMaxPolarIterations; ++it) {
    const ComplexMatrix gram = x.adjoint() * x;
    const double defect = distance(gram, eye);
    if (defect <= 1e-15 * static_cast<double>(n)) break;
    if (defect > 0.5) throw NoConvergence("nearest_unitary: matrix too far from unitary");
    ComplexMatrix corr = 3.0 * eye - gram;
    corr *= 0.5;
    x = x * corr;
  }
  return x;
}

LaxTrajectory integrate_U(const ComplexMatrix& b, int steps, double tol) {
  if (steps < 16) throw InvalidArgument("integrate_U: steps must be >= 16");
  const std::size_t n = b.size();
  const double h = 2.0 * std::numbers::pi / steps;
  const ComplexMatrix eye = ComplexMatrix::identity(n);
  const ComplexMatrix l0 = lax_L(b, 0.0);

  LaxTrajectory traj;
  traj.t_grid.reserve(static_cast<std::size_t>(steps) + 1);
  traj.P_samples.reserve(static_cast<std::size_t>(steps) + 1);
  traj.U_samples.reserve(static_cast<std::size_t>(steps) + 1);

  auto record = [&](double t, ComplexMatrix p, const ComplexMatrix& u) {
    traj.t_grid.push_back(t);
    traj.P_samples.push_back(std::move(p));
    traj.U_samples.push_back(u);
    traj.max_unitarity_error = std::max(traj.max_unitarity_error, distance(u.adjoint() * u, eye));
    traj.max_similarity_error =
        std::max(traj.max_similarity_error, distance(u * l0 * u.adjoint(), lax_L(b, t)));
  };

  ComplexMatrix u = eye;
  ComplexMatrix p_start = solve_P(b, 0.0, tol);
  record(0.0, p_start, u);

  const cplx half_h = 0.5 * h;
  for (int j = 0; j < steps; ++j) {
    const double t = j * h;
    const double t_next = (j + 1) * h;
    const ComplexMatrix p_mid = solve_P(b, t + 0.5 * h, tol);
    ComplexMatrix p_end = solve_P(b, t_next, tol);

    const ComplexMatrix k1 = p_start * u;
    const ComplexMatrix k2 = p_mid * (u + half_h * k1);
    const ComplexMatrix k3 = p_mid * (u + half_h * k2);
    const ComplexMatrix k4 = p_end * (u + cplx(h) * k3);
    ComplexMatrix incr = k1 + k4;
    incr += 2.0 * (k2 + k3);
    incr *= h / 6.0;
    u = nearest_unitary(u + incr);

    record(t_next, p_end, u);
    p_start = std::move(p_end);
  }
  return traj;
}

bool verify_lax(const ComplexMatrix& b, const LaxTrajectory& traj, double tol) {
  if (!traj.U_samples.empty() && traj.U_samples.front().size() != b.size())
    throw DimensionMismatch("verify_lax: trajectory does not match B");
  return traj.max_similarity_error <= tol && traj.max_unitarity_error <= tol;
}

std::vector<ComplexMatrix> eigenpath_V(const ComplexMatrix& b, const std::vector<double>& t_grid) {
  const std::size_t n = b.size();
  const double min_gap = 1e-8 * (1.0 + b.frobenius_norm());
  const auto& k = kernels::active_kernels();
  std::vector<ComplexMatrix> out;
  out.reserve(t_grid.size());
  for (double t : t_grid) {
    HermitianEig eig = eig_hermitian(lax_L(b, t));
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (eig.values[i] - eig.values[i + 1] < min_gap)
        throw DegenerateSpectrum("eigenpath_V: eigenvalue gap collapses at t = " + std::to_string(t));
    }
    ComplexMatrix v = std::move(eig.vectors);
    if (out.empty()) {
      for (std::size_t c = 0; c < n; ++c) normalize_phase(v, c);
    } else {
      // Column-major copies for contiguous overlaps.
      const ComplexMatrix prev_t = out.back().transpose();
      ComplexMatrix cur_t = v.transpose();
      for (std::size_t c = 0; c < n; ++c) {
        const cplx ov = k.cdotc(n, prev_t.row(c).data(), cur_t.row(c).data());
        if (std::abs(ov) < 1e-3) {
          normalize_phase(v, c);
          continue;
        }
        const cplx f = std::conj(ov) / std::abs(ov);
        for (std::size_t i = 0; i < n; ++i) v(i, c) *= f;
      }
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace isopencil
