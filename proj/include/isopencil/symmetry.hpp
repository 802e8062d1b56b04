#pragma once

#include <cstdint>
#include <vector>

#include "isopencil/matrix.hpp"
#include "isopencil/word_trace.hpp"

namespace isopencil {

inline constexpr double kCommutatorTol = 1e-8;

/// Minimum-norm skew-adjoint K for [K, B] = -iB in least squares.
struct CommutatorSolution {
  ComplexMatrix K;
  double residual = 0.0;  // ||[K, B] + iB||_F
  bool exists = false;    // residual <= tol_used (1 + ||B||_F)
  double tol_used = 0.0;
};

CommutatorSolution solve_K(const ComplexMatrix& b, double tol = kCommutatorTol);

/// max over t_j = 2 pi j / samples of ||e^{-tK} B e^{tK} - e^{it} B||_F.
double verify_rotation_similarity(const ComplexMatrix& b, const ComplexMatrix& k,
                                  int samples = 64);

/// U B U^* = B_1 (+) ... (+) B_r with each B_j block-superdiagonal.
struct BlockDecomposition {
  ComplexMatrix U;
  /// Outer: summands B_j. Inner: sizes of the square diagonal blocks of B_j.
  std::vector<std::vector<int>> block_sizes;
  /// Frobenius mass of U B U^* outside the permitted superdiagonal blocks.
  double off_pattern_norm = 0.0;
};

inline constexpr double kClusterTol = 1e-6;
inline constexpr double kChainSpacingTol = 1e-6;

/// Builds the block-superdiagonal form from a witness K. The eigenspaces of
/// -iK are clustered (gap threshold tol) and linked into chains mu -> mu + 1;
/// B maps the (mu + 1)-eigenspace into the mu-eigenspace.
/// Throws ClusterAmbiguity when a gap lies in (tol, 10 tol).
BlockDecomposition block_decompose(const ComplexMatrix& b, const ComplexMatrix& k,
                                   double tol = kClusterTol);

/// Zeroes everything of m outside the superdiagonal blocks described by
/// block_sizes (summands laid out consecutively).
ComplexMatrix block_pattern(const ComplexMatrix& m, const std::vector<std::vector<int>>& block_sizes);

struct WordViolation {
  Word word;  // least rotation of its cyclic class
  cplx trace;
};

/// Words of length 1..max_len with na(w, B) != na(w, B^*) whose trace exceeds
/// tol (1 + ||B||_F^|w|), one representative per cyclic class.
std::vector<WordViolation> bounded_word_check(const ComplexMatrix& b, int max_len,
                                              double tol = kWordTol,
                                              std::uint64_t budget = kDefaultWordBudget);

}  // namespace isopencil
