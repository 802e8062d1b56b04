#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace isopencil {

using cplx = std::complex<double>;

/// Default tolerances shared across modules.
inline constexpr double kHermiticityTol = 1e-12;
inline constexpr double kEigTol = 1e-10;
inline constexpr double kRankRelTol = 1e-10;

/// Dense square complex matrix, row-major.
///
/// Entries must stay finite; equality is always judged through a norm of the
/// difference, never entrywise.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t n);
  ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static ComplexMatrix zero(std::size_t n) { return ComplexMatrix(n); }
  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const cplx> d);
  static ComplexMatrix diagonal(std::initializer_list<cplx> d);

  std::size_t size() const { return n_; }
  bool empty() const { return n_ == 0; }

  cplx& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  cplx* data() { return a_.data(); }
  const cplx* data() const { return a_.data(); }
  std::span<cplx> row(std::size_t i) { return {a_.data() + i * n_, n_}; }
  std::span<const cplx> row(std::size_t i) const { return {a_.data() + i * n_, n_}; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;

  double frobenius_norm() const;
  bool all_finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(cplx s);

 private:
  std::size_t n_ = 0;
  std::vector<cplx> a_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

/// ||a - b||_F
double distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// [X, Y] = XY - YX. Throws DimensionMismatch.
ComplexMatrix commutator(const ComplexMatrix& x, const ComplexMatrix& y);

/// H(theta) = (e^{-i theta} B + e^{i theta} B^*) / 2, symmetrized exactly.
ComplexMatrix hermitian_part(const ComplexMatrix& b, double theta);

/// Re B = (B + B^*)/2 and Im B = (B - B^*)/(2i).
ComplexMatrix real_part(const ComplexMatrix& b);
ComplexMatrix imag_part(const ComplexMatrix& b);

cplx trace(const ComplexMatrix& m);
/// Tr(XY) without forming the product.
cplx trace_of_product(const ComplexMatrix& x, const ComplexMatrix& y);
/// Tr(B^k), k >= 1.
cplx trace_power(const ComplexMatrix& b, int k);
/// max_k |Tr B^k| / (1 + ||B||_F^k) over k = 1..n.
double nilpotency_defect(const ComplexMatrix& b);
/// |Tr B^k| <= tol (1 + ||B||_F^k) for every k = 1..n.
bool is_nilpotent(const ComplexMatrix& b, double tol);

/// ||M - M^*||_F
double hermitian_defect(const ComplexMatrix& m);
/// ||M + M^*||_F
double skew_defect(const ComplexMatrix& m);

}  // namespace isopencil
