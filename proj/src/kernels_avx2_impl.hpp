#pragma once

// Raw-pointer interface of the AVX2 kernels. This header is shared by the
// AVX2 translation unit and the dispatcher; it deliberately avoids
// std::complex so that no inline library code is instantiated with AVX
// encodings.

#include <cstddef>

namespace isopencil::kernels::avx2 {

bool cpu_supported();

// Complex arrays are interleaved (re, im) pairs; n counts complex elements.
void caxpy(std::size_t n, const double* alpha, const double* x, double* y);
void cdotu(std::size_t n, const double* x, const double* y, double* out);
void cdotc(std::size_t n, const double* x, const double* y, double* out);
void crot(std::size_t n, double* x, double* y, const double* abcd);

double dnrm2sq(std::size_t n, const double* x);
double ddot(std::size_t n, const double* x, const double* y);
void drot(std::size_t n, double* x, double* y, double c, double s);

}  // namespace isopencil::kernels::avx2
