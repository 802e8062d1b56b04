#include "isopencil/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "isopencil/errors.hpp"
#include "isopencil/kernels.hpp"
#include "isopencil/lstsq.hpp"

namespace isopencil {
namespace {

constexpr int kMaxJacobiSweeps = 30;
constexpr double kJacobiOffTol = 1e-13;

double off_diagonal_norm(const ComplexMatrix& h) {
  double s = 0.0;
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = 0; j < h.size(); ++j)
      if (i != j) s += std::norm(h(i, j));
  return std::sqrt(s);
}

// Diagonalizes h in place. When vt is non-null it accumulates V^T, so row k of
// *vt ends up holding the eigenvector of h(k, k).
void jacobi_diagonalize(ComplexMatrix& h, ComplexMatrix* vt) {
  const std::size_t n = h.size();
  const double scale = h.frobenius_norm();
  const auto& k = kernels::active_kernels();

  for (int sweep = 0;; ++sweep) {
    if (off_diagonal_norm(h) <= kJacobiOffTol * scale) return;
    if (sweep == kMaxJacobiSweeps)
      throw NoConvergence("eig_hermitian: Jacobi did not converge in 30 sweeps");

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx g = h(p, q);
        const double mag = std::abs(g);
        if (mag == 0.0) continue;
        const cplx e = g / mag;
        const double a = h(p, p).real();
        const double b = h(q, q).real();
        const double tau = (b - a) / (2.0 * mag);
        const double t = std::copysign(1.0, tau) / (std::abs(tau) + std::hypot(1.0, tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;

        // Rows p, q of J^* H, then restore Hermitian symmetry for columns p, q.
        k.crot(n, h.row(p).data(), h.row(q).data(), c, -s * e, s * std::conj(e), c);
        for (std::size_t j = 0; j < n; ++j) {
          if (j == p || j == q) continue;
          h(j, p) = std::conj(h(p, j));
          h(j, q) = std::conj(h(q, j));
        }
        h(p, p) = a - t * mag;
        h(q, q) = b + t * mag;
        h(p, q) = 0.0;
        h(q, p) = 0.0;

        if (vt != nullptr)
          k.crot(n, vt->row(p).data(), vt->row(q).data(), c, -s * std::conj(e), s * e, c);
      }
    }
  }
}

void require_hermitian(const ComplexMatrix& h) {
  if (!h.all_finite()) throw InvalidArgument("eig_hermitian: non-finite entries");
  if (hermitian_defect(h) > kHermiticityTol * h.frobenius_norm())
    throw NotHermitian("eig_hermitian: input is not Hermitian");
}

std::vector<std::size_t> descending_order(const ComplexMatrix& d) {
  std::vector<std::size_t> order(d.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return d(x, x).real() > d(y, y).real();
  });
  return order;
}

}  // namespace

HermitianEig eig_hermitian(const ComplexMatrix& h) {
  require_hermitian(h);
  const std::size_t n = h.size();
  ComplexMatrix d = hermitian_part(h, 0.0);
  ComplexMatrix vt = ComplexMatrix::identity(n);
  jacobi_diagonalize(d, &vt);

  HermitianEig out{std::vector<double>(n), ComplexMatrix(n)};
  const auto order = descending_order(d);
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t src = order[col];
    out.values[col] = d(src, src).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, col) = vt(src, i);
  }
  return out;
}

std::vector<double> eigvals_hermitian(const ComplexMatrix& h) {
  require_hermitian(h);
  ComplexMatrix d = hermitian_part(h, 0.0);
  jacobi_diagonalize(d, nullptr);
  std::vector<double> values(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) values[i] = d(i, i).real();
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

std::vector<double> singular_values(const ComplexMatrix& m) {
  // [[Re M, -Im M], [Im M, Re M]] carries every singular value of M twice.
  const std::size_t n = m.size();
  RealMatrix r(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      r(i, j) = m(i, j).real();
      r(i, j + n) = -m(i, j).imag();
      r(i + n, j) = m(i, j).imag();
      r(i + n, j + n) = m(i, j).real();
    }
  }
  const RealSvd svd = jacobi_svd(std::move(r));
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = 0.5 * (svd.sigma[2 * i] + svd.sigma[2 * i + 1]);
  return out;
}

int numeric_rank(const ComplexMatrix& m, double rel_tol) {
  if (!(rel_tol > 0)) throw InvalidArgument("numeric_rank: rel_tol must be positive");
  if (m.empty()) return 0;
  std::vector<double> mags;
  if (hermitian_defect(m) <= kHermiticityTol * m.frobenius_norm()) {
    mags = eigvals_hermitian(m);
    for (double& v : mags) v = std::abs(v);
  } else {
    mags = singular_values(m);
  }
  const double largest = *std::max_element(mags.begin(), mags.end());
  if (largest == 0.0) return 0;
  return static_cast<int>(
      std::count_if(mags.begin(), mags.end(), [&](double v) { return v > rel_tol * largest; }));
}

ComplexMatrix expm_skew(const ComplexMatrix& k, double t) {
  if (skew_defect(k) > kHermiticityTol * (1.0 + k.frobenius_norm()))
    throw NotSkewAdjoint("expm_skew: generator is not skew-adjoint");
  const std::size_t n = k.size();
  // K = -i H with H = iK Hermitian, so e^{tK} = V diag(e^{-i t lambda}) V^*.
  const ComplexMatrix h = hermitian_part(cplx(0.0, 1.0) * k, 0.0);
  const HermitianEig eig = eig_hermitian(h);
  ComplexMatrix scaled = eig.vectors;
  for (std::size_t j = 0; j < n; ++j) {
    const cplx f = std::polar(1.0, -t * eig.values[j]);
    for (std::size_t i = 0; i < n; ++i) scaled(i, j) *= f;
  }
  return scaled * eig.vectors.adjoint();
}

}  // namespace isopencil
