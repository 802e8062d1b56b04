#include <cstdlib>
#include <string_view>

#include "isopencil/kernels.hpp"

#ifdef ISOPENCIL_HAVE_AVX2
#include "kernels_avx2_impl.hpp"
#endif

namespace isopencil::kernels {

#ifdef ISOPENCIL_HAVE_AVX2
namespace {

const double* raw(const cplx* p) { return reinterpret_cast<const double*>(p); }
double* raw(cplx* p) { return reinterpret_cast<double*>(p); }

void caxpy_avx2(std::size_t n, cplx alpha, const cplx* x, cplx* y) {
  const double a[2] = {alpha.real(), alpha.imag()};
  avx2::caxpy(n, a, raw(x), raw(y));
}

cplx cdotu_avx2(std::size_t n, const cplx* x, const cplx* y) {
  double out[2];
  avx2::cdotu(n, raw(x), raw(y), out);
  return {out[0], out[1]};
}

cplx cdotc_avx2(std::size_t n, const cplx* x, const cplx* y) {
  double out[2];
  avx2::cdotc(n, raw(x), raw(y), out);
  return {out[0], out[1]};
}

void crot_avx2(std::size_t n, cplx* x, cplx* y, cplx a, cplx b, cplx c, cplx d) {
  const double abcd[8] = {a.real(), a.imag(), b.real(), b.imag(),
                          c.real(), c.imag(), d.real(), d.imag()};
  avx2::crot(n, raw(x), raw(y), abcd);
}

}  // namespace
#endif

const KernelTable* avx2_kernels() {
#ifdef ISOPENCIL_HAVE_AVX2
  static const KernelTable table{"avx2",        caxpy_avx2,     cdotu_avx2,
                                 cdotc_avx2,    crot_avx2,      avx2::dnrm2sq,
                                 avx2::ddot,    avx2::drot};
  static const bool supported = avx2::cpu_supported();
  return supported ? &table : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active_kernels() {
  static const KernelTable& chosen = [&]() -> const KernelTable& {
    const char* env = std::getenv("ISOPENCIL_SIMD");
    if (env != nullptr && std::string_view(env) == "scalar") return scalar_kernels();
    if (const KernelTable* t = avx2_kernels()) return *t;
    return scalar_kernels();
  }();
  return chosen;
}

}  // namespace isopencil::kernels
