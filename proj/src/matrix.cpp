#include "isopencil/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "isopencil/errors.hpp"
#include "isopencil/kernels.hpp"

namespace isopencil {
namespace {

void require_same_size(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.size() != b.size()) {
    throw DimensionMismatch(std::string(what) + ": dimensions " + std::to_string(a.size()) +
                            " and " + std::to_string(b.size()) + " differ");
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t n) : n_(n), a_(n * n) {}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows)
    : n_(rows.size()), a_() {
  a_.reserve(n_ * n_);
  for (const auto& r : rows) {
    if (r.size() != n_) throw InvalidArgument("ComplexMatrix: rows must form a square matrix");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const cplx> d) {
  ComplexMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<cplx> d) {
  return diagonal(std::span<const cplx>(d.begin(), d.size()));
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

double ComplexMatrix::frobenius_norm() const {
  const auto& k = kernels::active_kernels();
  return std::sqrt(k.dnrm2sq(2 * a_.size(), reinterpret_cast<const double*>(a_.data())));
}

bool ComplexMatrix::all_finite() const {
  for (const cplx& z : a_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  require_same_size(*this, o, "operator+");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  require_same_size(*this, o, "operator-");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
  for (cplx& z : a_) z *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_size(a, b, "matmul");
  const std::size_t n = a.size();
  const auto& k = kernels::active_kernels();
  ComplexMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    cplx* ci = c.row(i).data();
    for (std::size_t l = 0; l < n; ++l) {
      const cplx ail = a(i, l);
      if (ail != cplx{}) k.caxpy(n, ail, b.row(l).data(), ci);
    }
  }
  return c;
}

double distance(const ComplexMatrix& a, const ComplexMatrix& b) { return (a - b).frobenius_norm(); }

ComplexMatrix commutator(const ComplexMatrix& x, const ComplexMatrix& y) {
  require_same_size(x, y, "commutator");
  return x * y - y * x;
}

ComplexMatrix hermitian_part(const ComplexMatrix& b, double theta) {
  const std::size_t n = b.size();
  const cplx phase = std::polar(1.0, -theta);
  ComplexMatrix h(n);
  for (std::size_t i = 0; i < n; ++i) {
    h(i, i) = (phase * b(i, i)).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const cplx v = 0.5 * (phase * b(i, j) + std::conj(phase * b(j, i)));
      h(i, j) = v;
      h(j, i) = std::conj(v);
    }
  }
  return h;
}

ComplexMatrix real_part(const ComplexMatrix& b) { return hermitian_part(b, 0.0); }

ComplexMatrix imag_part(const ComplexMatrix& b) {
  const std::size_t n = b.size();
  ComplexMatrix h(n);
  for (std::size_t i = 0; i < n; ++i) {
    h(i, i) = b(i, i).imag();
    for (std::size_t j = i + 1; j < n; ++j) {
      const cplx v = (b(i, j) - std::conj(b(j, i))) / cplx(0.0, 2.0);
      h(i, j) = v;
      h(j, i) = std::conj(v);
    }
  }
  return h;
}

cplx trace(const ComplexMatrix& m) {
  cplx t{};
  for (std::size_t i = 0; i < m.size(); ++i) t += m(i, i);
  return t;
}

cplx trace_of_product(const ComplexMatrix& x, const ComplexMatrix& y) {
  require_same_size(x, y, "trace_of_product");
  // Tr(XY) = sum_{i,l} X_il Y_li = <vec X, vec Y^T> without conjugation.
  const ComplexMatrix yt = y.transpose();
  return kernels::active_kernels().cdotu(x.size() * x.size(), x.data(), yt.data());
}

cplx trace_power(const ComplexMatrix& b, int k) {
  if (k < 1) throw InvalidArgument("trace_power: k must be >= 1");
  if (k == 1) return trace(b);
  ComplexMatrix p = b;
  for (int i = 2; i < k; ++i) p = p * b;
  return trace_of_product(p, b);
}

double nilpotency_defect(const ComplexMatrix& b) {
  const double norm = b.frobenius_norm();
  double worst = 0.0;
  ComplexMatrix p = b;
  for (std::size_t k = 1; k <= b.size(); ++k) {
    if (k > 1) p = p * b;
    worst = std::max(worst, std::abs(trace(p)) / (1.0 + std::pow(norm, static_cast<double>(k))));
  }
  return worst;
}

bool is_nilpotent(const ComplexMatrix& b, double tol) {
  if (!(tol > 0)) throw InvalidArgument("is_nilpotent: tol must be positive");
  return nilpotency_defect(b) <= tol;
}

double hermitian_defect(const ComplexMatrix& m) { return distance(m, m.adjoint()); }

double skew_defect(const ComplexMatrix& m) { return (m + m.adjoint()).frobenius_norm(); }

}  // namespace isopencil
