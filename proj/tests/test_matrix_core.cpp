#include <doctest.h>

#include <algorithm>
#include <numbers>

#include "fixtures.hpp"
#include "isopencil/eigen.hpp"
#include "isopencil/errors.hpp"
#include "isopencil/matrix.hpp"

using namespace isopencil;
using namespace isopencil::testing;

namespace {

constexpr double pi = std::numbers::pi;

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("matrix product matches the naive triple loop") {
  Rng rng(1);
  for (std::size_t n : {1u, 2u, 3u, 5u, 8u, 13u}) {
    const ComplexMatrix a = rng.dense(n), b = rng.dense(n);
    CHECK(naive_distance(a * b, naive_mul(a, b)) <= 1e-13 * (1.0 + static_cast<double>(n)));
    CHECK(std::abs(a.frobenius_norm() - naive_frobenius(a)) <= 1e-13 * naive_frobenius(a));
    CHECK(std::abs(trace_of_product(a, b) - trace(naive_mul(a, b))) <= 1e-12 * static_cast<double>(n));
  }
}

TEST_CASE("hermitian_part") {
  const ComplexMatrix b = nilpotent_4x4();
  SUBCASE("theta = 0 gives (B + B^*)/2") {
    CHECK(naive_distance(hermitian_part(b, 0.0), 0.5 * (b + naive_adjoint(b))) <= 1e-15);
  }
  SUBCASE("Hermitian B gives cos(theta) B") {
    Rng rng(2);
    const ComplexMatrix h = rng.hermitian(4);
    for (double t : {0.3, 1.7, 4.0})
      CHECK(naive_distance(hermitian_part(h, t), std::cos(t) * h) <= 1e-14);
  }
  SUBCASE("theta = pi/2 gives Im B") {
    const ComplexMatrix im = (b - naive_adjoint(b));
    CHECK(naive_distance(hermitian_part(b, pi / 2), cplx(0, -0.5) * im) <= 1e-15);
    CHECK(naive_distance(imag_part(b), cplx(0, -0.5) * im) <= 1e-15);
  }
  SUBCASE("properties on random input") {
    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
      const ComplexMatrix m = rng.dense(static_cast<std::size_t>(rng.integer(1, 7)));
      const double t = rng.uniform(0, 2 * pi);
      const ComplexMatrix h = hermitian_part(m, t);
      CHECK(naive_distance(h, naive_adjoint(h)) == 0.0);
      CHECK(naive_distance(hermitian_part(m, t + pi), -1.0 * h) <= 1e-14 * naive_frobenius(m));
      CHECK(naive_distance(h, std::cos(t) * real_part(m) + std::sin(t) * imag_part(m)) <=
            1e-14 * naive_frobenius(m));
    }
  }
}

TEST_CASE("eig_hermitian examples") {
  SUBCASE("diagonal input") {
    const auto e = eig_hermitian(ComplexMatrix::diagonal({-1.0, -0.5, 0.5, 1.0}));
    CHECK(e.values == std::vector<double>{1.0, 0.5, -0.5, -1.0});
  }
  SUBCASE("2x2 Jordan block: +-1/2 for every angle") {
    for (double t : {0.0, 0.4, 1.0, 2.5, 5.9}) {
      const ComplexMatrix h = hermitian_part(jordan(2), t);
      const auto [hi, lo] = eig2x2_hermitian(h);
      CHECK(hi == doctest::Approx(0.5).epsilon(1e-15));
      CHECK(lo == doctest::Approx(-0.5).epsilon(1e-15));
      CHECK(max_abs_diff(eig_hermitian(h).values, {hi, lo}) <= 1e-14);
    }
  }
  SUBCASE("4x4 nilpotent example: constant spectrum 1, 1/2, -1/2, -1") {
    for (double t : {0.0, 0.7, 2.0, 3.3, 6.0})
      CHECK(max_abs_diff(eig_hermitian(hermitian_part(nilpotent_4x4(), t)).values,
                         {1.0, 0.5, -0.5, -1.0}) <= 1e-12);
  }
  SUBCASE("rejects non-Hermitian input") {
    CHECK_THROWS_AS(eig_hermitian(jordan(3)), NotHermitian);
  }
}

TEST_CASE("eig_hermitian invariants on random input") {
  Rng rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(1, 12));
    const ComplexMatrix h = rng.hermitian(n);
    const HermitianEig e = eig_hermitian(h);
    CHECK(std::is_sorted(e.values.rbegin(), e.values.rend()));
    ComplexMatrix d(n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = e.values[i];
    CHECK(naive_distance(naive_mul(h, e.vectors), naive_mul(e.vectors, d)) <=
          kEigTol * (1.0 + naive_frobenius(h)));
    CHECK(naive_distance(naive_mul(naive_adjoint(e.vectors), e.vectors), ComplexMatrix::identity(n)) <=
          kEigTol);
    // lambda_{n+1-k}(H) = -lambda_k(-H)
    const auto neg = eig_hermitian(-1.0 * h).values;
    for (std::size_t k = 0; k < n; ++k) CHECK(std::abs(e.values[n - 1 - k] + neg[k]) <= 1e-12);
    CHECK(max_abs_diff(eigvals_hermitian(h), e.values) <= 1e-13);
  }
}

TEST_CASE("numeric_rank") {
  CHECK(numeric_rank(ComplexMatrix::zero(3)) == 0);
  CHECK(numeric_rank(real_part(nilpotent_4x4())) == 4);
  CHECK(numeric_rank(hermitian_part(diag_1_0_m1_i(), pi / 2)) == 1);
  // Non-Hermitian input goes through singular values.
  CHECK(numeric_rank(jordan(5)) == 4);
  Rng rng(5);
  const ComplexMatrix u = rng.unitary(6);
  ComplexMatrix d = ComplexMatrix::diagonal({3.0, 2.0, 1e-3, 0.0, 0.0, 1.0});
  const ComplexMatrix low_rank = naive_mul(naive_mul(rng.unitary(6), d), u);
  CHECK(numeric_rank(low_rank) == 4);
  CHECK(numeric_rank(low_rank, 1e-2) == 3);
  const auto sv = singular_values(low_rank);
  CHECK(sv[0] == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(sv[2] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sv[3] == doctest::Approx(1e-3).epsilon(1e-9));
  CHECK(sv[5] <= 1e-14);
}

TEST_CASE("trace_power and is_nilpotent") {
  for (int k = 1; k <= 4; ++k) CHECK(std::abs(trace_power(nilpotent_4x4(), k)) == 0.0);
  for (int k = 1; k <= 5; ++k) CHECK(std::abs(trace_power(unit_disk_5x5(), k)) == 0.0);
  CHECK(trace_power(ComplexMatrix::identity(3), 2) == cplx(3.0));
  CHECK_THROWS_AS(trace_power(jordan(2), 0), InvalidArgument);

  CHECK(is_nilpotent(nilpotent_4x4(), 1e-12));
  CHECK_FALSE(is_nilpotent(diag_1_0_m1_i(), 1e-8));
  CHECK(trace_power(diag_1_0_m1_i(), 4) == cplx(3.0));
  CHECK(is_nilpotent(ComplexMatrix::zero(3), 1e-12));
}

TEST_CASE("trace_power equals power sums of eigenvalues for normal matrices") {
  Rng rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(1, 7));
    std::vector<cplx> ev(n);
    for (auto& z : ev) z = rng.gaussian();
    const ComplexMatrix u = rng.unitary(n);
    const ComplexMatrix b = conjugate(u, ComplexMatrix::diagonal(ev));
    for (int k = 1; k <= 6; ++k) {
      cplx want{};
      for (const cplx& z : ev) want += std::pow(z, k);
      CHECK(std::abs(trace_power(b, k) - want) <= 1e-9 * (1.0 + std::abs(want)));
    }
  }
}

TEST_CASE("expm_skew") {
  SUBCASE("diagonal generator") {
    const ComplexMatrix k = ComplexMatrix::diagonal({0.0, I, 2.0 * I});
    for (double t : {0.0, 0.5, 2.0}) {
      const ComplexMatrix want =
          ComplexMatrix::diagonal({1.0, std::polar(1.0, t), std::polar(1.0, 2 * t)});
      CHECK(naive_distance(expm_skew(k, t), want) <= 1e-14);
    }
  }
  SUBCASE("zero generator and t = 0") {
    CHECK(naive_distance(expm_skew(ComplexMatrix::zero(3), 1.3), ComplexMatrix::identity(3)) == 0.0);
    CHECK(naive_distance(expm_skew(reference_P(0.0), 0.0), ComplexMatrix::identity(4)) <= 1e-15);
  }
  SUBCASE("rejects non-skew generator") {
    CHECK_THROWS_AS(expm_skew(jordan(3), 1.0), NotSkewAdjoint);
  }
  SUBCASE("group property and unitarity") {
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t n = static_cast<std::size_t>(rng.integer(1, 8));
      const ComplexMatrix k = rng.skew(n);
      const double t = rng.uniform(-2, 2), s = rng.uniform(-2, 2);
      const ComplexMatrix et = expm_skew(k, t);
      CHECK(naive_distance(naive_mul(et, expm_skew(k, s)), expm_skew(k, t + s)) <= 1e-10);
      CHECK(naive_distance(naive_mul(naive_adjoint(et), et), ComplexMatrix::identity(n)) <= kEigTol);
    }
  }
  SUBCASE("matches a truncated Taylor series") {
    Rng rng(8);
    const ComplexMatrix k = 0.3 * rng.skew(4);
    ComplexMatrix term = ComplexMatrix::identity(4), sum = ComplexMatrix::identity(4);
    for (int m = 1; m < 30; ++m) {
      term = (1.0 / m) * naive_mul(term, k);
      sum += term;
    }
    CHECK(naive_distance(expm_skew(k, 1.0), sum) <= 1e-13);
  }
}

TEST_CASE("commutator") {
  Rng rng(9);
  const ComplexMatrix x = rng.dense(4);
  CHECK(naive_frobenius(commutator(x, x)) == 0.0);
  for (std::size_t n : {2u, 3u, 6u})
    CHECK(naive_distance(commutator(jordan_generator(n), jordan(n)), -I * jordan(n)) <= 1e-15);
  CHECK_THROWS_AS(commutator(jordan(2), jordan(3)), DimensionMismatch);
}
