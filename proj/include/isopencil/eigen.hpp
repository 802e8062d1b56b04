#pragma once

#include <vector>

#include "isopencil/matrix.hpp"

namespace isopencil {

/// Eigendecomposition of a Hermitian matrix.
struct HermitianEig {
  std::vector<double> values;  // descending
  ComplexMatrix vectors;       // column k pairs with values[k]
};

/// Cyclic complex Jacobi. Throws NotHermitian when
/// ||H - H^*||_F > kHermiticityTol ||H||_F and NoConvergence after 30 sweeps.
HermitianEig eig_hermitian(const ComplexMatrix& h);

/// Eigenvalues only (descending); same algorithm without accumulating vectors.
std::vector<double> eigvals_hermitian(const ComplexMatrix& h);

/// Number of singular values above rel_tol times the largest one.
/// Hermitian input is ranked through its eigenvalue magnitudes.
int numeric_rank(const ComplexMatrix& m, double rel_tol = kRankRelTol);

/// Singular values of a general square complex matrix, descending.
std::vector<double> singular_values(const ComplexMatrix& m);

/// e^{tK} for skew-adjoint K, built from the eigendecomposition of iK.
/// Throws NotSkewAdjoint.
ComplexMatrix expm_skew(const ComplexMatrix& k, double t);

}  // namespace isopencil
