#pragma once

// Shared test matrices and independent oracles. Nothing here calls into the
// code paths it is used to check.

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "isopencil/matrix.hpp"

namespace isopencil::testing {

inline constexpr cplx I{0.0, 1.0};

/// Strictly upper triangular 4x4 that is isospectral without a constant generator.
inline ComplexMatrix nilpotent_4x4() {
  return {{0, 1, 1, 0}, {0, 0, 1, -1}, {0, 0, 0, 1}, {0, 0, 0, 0}};
}

/// 5x5 analogue of nilpotent_4x4.
inline ComplexMatrix nilpotent_5x5() {
  return {{0, 1, 0.5, 1, 0},
          {0, 0, 1, -1, -1},
          {0, 0, 0, 1, 1.5},
          {0, 0, 0, 0, 1},
          {0, 0, 0, 0, 0}};
}

/// Nilpotent 5x5 whose numerical range is the unit disk but whose pencil is
/// not isospectral.
inline ComplexMatrix unit_disk_5x5() {
  ComplexMatrix b(5);
  b(0, 1) = 2;
  b(2, 3) = 1;
  b(2, 4) = 1;
  b(3, 4) = 1;
  return b;
}

inline ComplexMatrix diag_1_0_m1_i() { return ComplexMatrix::diagonal({1.0, 0.0, -1.0, I}); }

/// n x n nilpotent Jordan block (ones on the superdiagonal).
inline ComplexMatrix jordan(std::size_t n) {
  ComplexMatrix j(n);
  for (std::size_t i = 0; i + 1 < n; ++i) j(i, i + 1) = 1.0;
  return j;
}

/// i diag(0, 1, ..., n-1).
inline ComplexMatrix jordan_generator(std::size_t n) {
  ComplexMatrix k(n);
  for (std::size_t i = 0; i < n; ++i) k(i, i) = I * static_cast<double>(i);
  return k;
}

/// A known explicit Lax generator for nilpotent_4x4 (not the minimum-norm one).
inline ComplexMatrix reference_P(double t) {
  ComplexMatrix p(4);
  p(0, 0) = -0.5 * I;
  p(0, 3) = 0.5 * I * std::polar(1.0, -2.0 * t);
  p(2, 2) = I;
  p(3, 0) = 0.5 * I * std::polar(1.0, 2.0 * t);
  p(3, 3) = 1.5 * I;
  return p;
}

/// Known eigenvector matrix V(0) for nilpotent_4x4; column j pairs with
/// eigenvalue reference_V_eigenvalues()[j].
inline ComplexMatrix reference_V0() {
  return {{0, -2, 0, 2}, {2, 1, -1, 2}, {-2, 1, 1, 2}, {2, 0, 2, 0}};
}
inline std::vector<double> reference_V_eigenvalues() { return {-1.0, -0.5, 0.5, 1.0}; }

// Naive dense helpers used as oracles.

inline ComplexMatrix naive_mul(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t n = a.size();
  ComplexMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      cplx s{};
      for (std::size_t l = 0; l < n; ++l) s += a(i, l) * b(l, j);
      c(i, j) = s;
    }
  return c;
}

inline double naive_frobenius(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

inline double naive_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) s += std::norm(a(i, j) - b(i, j));
  return std::sqrt(s);
}

inline ComplexMatrix naive_adjoint(const ComplexMatrix& a) {
  ComplexMatrix r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) r(j, i) = std::conj(a(i, j));
  return r;
}

// Random generators.

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double normal() { return normal_(gen_); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  cplx gaussian() { return {normal(), normal()}; }

  ComplexMatrix dense(std::size_t n) {
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = gaussian();
    return m;
  }

  ComplexMatrix strictly_upper(std::size_t n) {
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) m(i, j) = gaussian();
    return m;
  }

  ComplexMatrix hermitian(std::size_t n) {
    ComplexMatrix m = dense(n);
    return 0.5 * (m + naive_adjoint(m));
  }

  ComplexMatrix skew(std::size_t n) {
    ComplexMatrix m = dense(n);
    return 0.5 * (m - naive_adjoint(m));
  }

  /// Haar-ish unitary by modified Gram-Schmidt on a Gaussian matrix.
  ComplexMatrix unitary(std::size_t n) {
    ComplexMatrix m = dense(n);
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t p = 0; p < c; ++p) {
        cplx dot{};
        for (std::size_t i = 0; i < n; ++i) dot += std::conj(m(i, p)) * m(i, c);
        for (std::size_t i = 0; i < n; ++i) m(i, c) -= dot * m(i, p);
      }
      double nrm = 0.0;
      for (std::size_t i = 0; i < n; ++i) nrm += std::norm(m(i, c));
      nrm = std::sqrt(nrm);
      for (std::size_t i = 0; i < n; ++i) m(i, c) /= nrm;
    }
    return m;
  }

 private:
  std::mt19937_64 gen_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

/// U M U^*.
inline ComplexMatrix conjugate(const ComplexMatrix& u, const ComplexMatrix& m) {
  return naive_mul(naive_mul(u, m), naive_adjoint(u));
}

/// Block-superdiagonal matrix with the given diagonal block sizes and random
/// superdiagonal blocks, plus the generator diag(i m I) for it (offset by
/// i * shift).
struct SuperdiagonalSummand {
  ComplexMatrix b;
  ComplexMatrix k;
};

inline SuperdiagonalSummand superdiagonal_summand(Rng& rng, const std::vector<int>& sizes, double shift) {
  std::size_t n = 0;
  for (int s : sizes) n += static_cast<std::size_t>(s);
  SuperdiagonalSummand out{ComplexMatrix(n), ComplexMatrix(n)};
  std::size_t row0 = 0;
  for (std::size_t c = 0; c < sizes.size(); ++c) {
    const std::size_t rows = static_cast<std::size_t>(sizes[c]);
    for (std::size_t i = row0; i < row0 + rows; ++i)
      out.k(i, i) = I * (static_cast<double>(c + 1) + shift);
    if (c + 1 < sizes.size()) {
      const std::size_t col0 = row0 + rows;
      for (std::size_t i = row0; i < row0 + rows; ++i)
        for (std::size_t j = col0; j < col0 + static_cast<std::size_t>(sizes[c + 1]); ++j)
          out.b(i, j) = rng.gaussian();
    }
    row0 += rows;
  }
  return out;
}

inline ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix m(a.size() + b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) m(a.size() + i, a.size() + j) = b(i, j);
  return m;
}

/// Eigenvalues of a 2x2 Hermitian matrix, descending (closed form).
inline std::pair<double, double> eig2x2_hermitian(const ComplexMatrix& h) {
  const double a = h(0, 0).real(), d = h(1, 1).real();
  const double mid = 0.5 * (a + d);
  const double rad = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(h(0, 1)));
  return {mid + rad, mid - rad};
}

}  // namespace isopencil::testing
