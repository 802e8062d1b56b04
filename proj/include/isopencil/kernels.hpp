#pragma once

// Inner-loop kernels for dense complex and real vectors.
//
// Every kernel exists as a portable scalar reference and, on x86-64 builds,
// as an AVX2/FMA variant. The variant is chosen once at runtime from CPUID.
// Setting ISOPENCIL_SIMD=scalar in the environment forces the reference path.

#include <complex>
#include <cstddef>
#include <string_view>

namespace isopencil::kernels {

using cplx = std::complex<double>;

struct KernelTable {
  std::string_view name;

  // y += alpha * x
  void (*caxpy)(std::size_t n, cplx alpha, const cplx* x, cplx* y);
  // sum x_i * y_i
  cplx (*cdotu)(std::size_t n, const cplx* x, const cplx* y);
  // sum conj(x_i) * y_i
  cplx (*cdotc)(std::size_t n, const cplx* x, const cplx* y);
  // (x, y) <- (a x + b y, c x + d y)
  void (*crot)(std::size_t n, cplx* x, cplx* y, cplx a, cplx b, cplx c, cplx d);

  // sum x_i^2
  double (*dnrm2sq)(std::size_t n, const double* x);
  // sum x_i * y_i
  double (*ddot)(std::size_t n, const double* x, const double* y);
  // (x, y) <- (c x - s y, s x + c y)
  void (*drot)(std::size_t n, double* x, double* y, double c, double s);
};

const KernelTable& scalar_kernels();

/// The AVX2 table, or nullptr when it was not compiled in or the CPU lacks
/// AVX2/FMA.
const KernelTable* avx2_kernels();

/// The table used by the library.
const KernelTable& active_kernels();

}  // namespace isopencil::kernels
