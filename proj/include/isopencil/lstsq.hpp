#pragma once

#include <cstddef>
#include <vector>

#include "isopencil/matrix.hpp"

namespace isopencil {

/// Dense real matrix, column-major. Used only for realified linear systems.
class RealMatrix {
 public:
  RealMatrix() = default;
  RealMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t i, std::size_t j) { return a_[j * rows_ + i]; }
  double operator()(std::size_t i, std::size_t j) const { return a_[j * rows_ + i]; }
  double* col(std::size_t j) { return a_.data() + j * rows_; }
  const double* col(std::size_t j) const { return a_.data() + j * rows_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> a_;
};

/// Thin SVD A = U diag(sigma) V^T by one-sided (Hestenes) Jacobi.
/// sigma is descending; U is rows x cols, V is cols x cols.
struct RealSvd {
  RealMatrix u;
  std::vector<double> sigma;
  RealMatrix v;
};

RealSvd jacobi_svd(RealMatrix a);

/// Minimum-norm least-squares solution of A x = b. Singular values at or
/// below rcond * sigma_max are treated as zero.
std::vector<double> min_norm_lstsq(const RealMatrix& a, const std::vector<double>& b,
                                   double rcond = 1e-12);

/// Result of min ||[X, M] - R||_F over skew-adjoint X.
struct SkewCommutatorFit {
  ComplexMatrix x;  // minimum-Frobenius-norm minimizer
  double residual;  // ||[X, M] - R||_F
};

/// Solves [X, M] = R in least squares over skew-adjoint X. X is parameterized
/// by n imaginary diagonal entries and the real and imaginary parts of the
/// strictly lower triangle, scaled so that the parameter 2-norm equals
/// ||X||_F; the minimum-norm solution of the realified 2n^2 x n^2 system is
/// therefore the minimum-Frobenius-norm witness.
SkewCommutatorFit fit_skew_commutator(const ComplexMatrix& m, const ComplexMatrix& rhs);

}  // namespace isopencil
