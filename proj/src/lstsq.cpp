#include "isopencil/lstsq.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "isopencil/errors.hpp"
#include "isopencil/kernels.hpp"

namespace isopencil {
namespace {

constexpr int kMaxSvdSweeps = 100;
constexpr double kEps = 2.220446049250313e-16;

}  // namespace

RealSvd jacobi_svd(RealMatrix a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  const auto& k = kernels::active_kernels();

  RealMatrix v(n, n);
  for (std::size_t j = 0; j < n; ++j) v(j, j) = 1.0;

  // Columns below this squared norm are numerically zero and never rotated.
  double total = 0.0;
  for (std::size_t j = 0; j < n; ++j) total += k.dnrm2sq(m, a.col(j));
  const double negligible = kEps * kEps * total;
  const double orth_tol = kEps * std::sqrt(static_cast<double>(std::max<std::size_t>(m, 1)));

  bool converged = (n < 2);
  for (int sweep = 0; sweep < kMaxSvdSweeps && !converged; ++sweep) {
    converged = true;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double alpha = k.dnrm2sq(m, a.col(p));
        const double beta = k.dnrm2sq(m, a.col(q));
        const double gamma = k.ddot(m, a.col(p), a.col(q));
        if (alpha <= negligible || beta <= negligible) continue;
        if (std::abs(gamma) <= orth_tol * std::sqrt(alpha * beta)) continue;
        converged = false;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::hypot(1.0, zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        k.drot(m, a.col(p), a.col(q), c, s);
        k.drot(n, v.col(p), v.col(q), c, s);
      }
    }
  }
  if (!converged) throw NoConvergence("jacobi_svd: no convergence");

  std::vector<double> norms(n);
  for (std::size_t j = 0; j < n; ++j) norms[j] = std::sqrt(k.dnrm2sq(m, a.col(j)));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return norms[x] > norms[y]; });

  RealSvd out{RealMatrix(m, n), std::vector<double>(n), RealMatrix(n, n)};
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t src = order[j];
    const double s = norms[src];
    out.sigma[j] = s;
    if (s > 0.0)
      for (std::size_t i = 0; i < m; ++i) out.u(i, j) = a(i, src) / s;
    std::copy(v.col(src), v.col(src) + n, out.v.col(j));
  }
  return out;
}

std::vector<double> min_norm_lstsq(const RealMatrix& a, const std::vector<double>& b,
                                   double rcond) {
  if (b.size() != a.rows()) throw DimensionMismatch("min_norm_lstsq: rhs length mismatch");
  const RealSvd svd = jacobi_svd(a);
  const std::size_t n = a.cols();
  const auto& k = kernels::active_kernels();
  std::vector<double> x(n, 0.0);
  if (n == 0 || svd.sigma[0] == 0.0) return x;
  const double cutoff = rcond * svd.sigma[0];
  for (std::size_t j = 0; j < n; ++j) {
    if (svd.sigma[j] <= cutoff) break;
    const double coef = k.ddot(a.rows(), svd.u.col(j), b.data()) / svd.sigma[j];
    for (std::size_t i = 0; i < n; ++i) x[i] += coef * svd.v(i, j);
  }
  return x;
}

SkewCommutatorFit fit_skew_commutator(const ComplexMatrix& m, const ComplexMatrix& rhs) {
  if (m.size() != rhs.size()) throw DimensionMismatch("fit_skew_commutator: dimension mismatch");
  const std::size_t n = m.size();
  const std::size_t nn = n * n;

  // Basis element = up to two entries (r, c, value); ||E||_F = 1, mutually orthogonal.
  struct Entry {
    std::size_t r, c;
    cplx v;
  };
  struct Basis {
    Entry e[2];
    int count;
  };
  std::vector<Basis> basis;
  basis.reserve(nn);
  const double h = 1.0 / std::sqrt(2.0);
  for (std::size_t j = 0; j < n; ++j) basis.push_back({{{j, j, cplx(0.0, 1.0)}, {}}, 1});
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t l = 0; l < j; ++l) {
      basis.push_back({{{j, l, cplx(h, 0.0)}, {l, j, cplx(-h, 0.0)}}, 2});
      basis.push_back({{{j, l, cplx(0.0, h)}, {l, j, cplx(0.0, h)}}, 2});
    }
  }

  // Column p holds realified [E_p, M] = E_p M - M E_p.
  RealMatrix a(2 * nn, nn);
  ComplexMatrix col(n);
  for (std::size_t p = 0; p < basis.size(); ++p) {
    std::fill(col.data(), col.data() + nn, cplx{});
    for (int e = 0; e < basis[p].count; ++e) {
      const Entry& en = basis[p].e[e];
      for (std::size_t j = 0; j < n; ++j) col(en.r, j) += en.v * m(en.c, j);
      for (std::size_t i = 0; i < n; ++i) col(i, en.c) -= en.v * m(i, en.r);
    }
    double* dst = a.col(p);
    for (std::size_t q = 0; q < nn; ++q) {
      dst[q] = col.data()[q].real();
      dst[nn + q] = col.data()[q].imag();
    }
  }
  std::vector<double> b(2 * nn);
  for (std::size_t q = 0; q < nn; ++q) {
    b[q] = rhs.data()[q].real();
    b[nn + q] = rhs.data()[q].imag();
  }

  const std::vector<double> coef = min_norm_lstsq(a, b);

  ComplexMatrix x(n);
  for (std::size_t p = 0; p < basis.size(); ++p)
    for (int e = 0; e < basis[p].count; ++e)
      x(basis[p].e[e].r, basis[p].e[e].c) += coef[p] * basis[p].e[e].v;

  const double residual = distance(commutator(x, m), rhs);
  return {std::move(x), residual};
}

}  // namespace isopencil
