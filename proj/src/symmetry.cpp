#include "isopencil/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "isopencil/eigen.hpp"
#include "isopencil/errors.hpp"
#include "isopencil/lstsq.hpp"

namespace isopencil {
namespace {

constexpr cplx kI{0.0, 1.0};

struct Cluster {
  double value;
  std::vector<std::size_t> columns;  // eigenvector columns
};

}  // namespace

CommutatorSolution solve_K(const ComplexMatrix& b, double tol) {
  if (!(tol > 0)) throw InvalidArgument("solve_K: tol must be positive");
  SkewCommutatorFit fit = fit_skew_commutator(b, -kI * b);
  CommutatorSolution sol;
  sol.K = std::move(fit.x);
  sol.residual = fit.residual;
  sol.tol_used = tol;
  sol.exists = sol.residual <= tol * (1.0 + b.frobenius_norm());
  return sol;
}

double verify_rotation_similarity(const ComplexMatrix& b, const ComplexMatrix& k, int samples) {
  if (samples < 1) throw InvalidArgument("verify_rotation_similarity: samples must be >= 1");
  if (b.size() != k.size()) throw DimensionMismatch("verify_rotation_similarity: dimension mismatch");
  double worst = 0.0;
  for (int j = 0; j < samples; ++j) {
    const double t = 2.0 * std::numbers::pi * j / samples;
    const ComplexMatrix u = expm_skew(k, -t);
    const ComplexMatrix rotated = u * b * u.adjoint();
    worst = std::max(worst, distance(rotated, std::polar(1.0, t) * b));
  }
  return worst;
}

ComplexMatrix block_pattern(const ComplexMatrix& m, const std::vector<std::vector<int>>& block_sizes) {
  ComplexMatrix out(m.size());
  std::size_t offset = 0;
  for (const auto& summand : block_sizes) {
    std::size_t row0 = offset;
    for (std::size_t c = 0; c + 1 < summand.size(); ++c) {
      const std::size_t rows = static_cast<std::size_t>(summand[c]);
      const std::size_t col0 = row0 + rows;
      const std::size_t cols = static_cast<std::size_t>(summand[c + 1]);
      for (std::size_t i = row0; i < row0 + rows; ++i)
        for (std::size_t j = col0; j < col0 + cols; ++j) out(i, j) = m(i, j);
      row0 = col0;
    }
    for (int s : summand) offset += static_cast<std::size_t>(s);
  }
  return out;
}

BlockDecomposition block_decompose(const ComplexMatrix& b, const ComplexMatrix& k, double tol) {
  if (b.size() != k.size()) throw DimensionMismatch("block_decompose: dimension mismatch");
  if (!(tol > 0)) throw InvalidArgument("block_decompose: tol must be positive");
  const std::size_t n = b.size();
  const double scale = 1.0 + b.frobenius_norm();
  if (distance(commutator(k, b), -kI * b) > 1e-6 * scale)
    throw InvalidArgument("block_decompose: K does not satisfy [K, B] = -iB");

  const HermitianEig eig = eig_hermitian(hermitian_part(-kI * k, 0.0));

  // Ascending eigenvalues of -iK, grouped by gap.
  std::vector<Cluster> clusters;
  for (std::size_t idx = n; idx-- > 0;) {
    const double v = eig.values[idx];
    if (!clusters.empty()) {
      const double prev = eig.values[clusters.back().columns.back()];
      const double gap = v - prev;
      if (gap > tol && gap < 10.0 * tol)
        throw ClusterAmbiguity("block_decompose: eigenvalue gap inside the ambiguity band");
      if (gap <= tol) {
        clusters.back().columns.push_back(idx);
        continue;
      }
    }
    clusters.push_back({v, {idx}});
  }
  for (Cluster& c : clusters) {
    double s = 0.0;
    for (std::size_t col : c.columns) s += eig.values[col];
    c.value = s / static_cast<double>(c.columns.size());
  }

  // Link clusters mu -> mu + 1 into chains.
  std::vector<bool> used(clusters.size(), false);
  std::vector<std::vector<std::size_t>> chains;
  for (std::size_t start = 0; start < clusters.size(); ++start) {
    if (used[start]) continue;
    std::vector<std::size_t> chain{start};
    used[start] = true;
    for (;;) {
      const double target = clusters[chain.back()].value + 1.0;
      std::size_t next = clusters.size();
      for (std::size_t c = chain.back() + 1; c < clusters.size(); ++c) {
        if (!used[c] && std::abs(clusters[c].value - target) <= kChainSpacingTol) {
          next = c;
          break;
        }
      }
      if (next == clusters.size()) break;
      used[next] = true;
      chain.push_back(next);
    }
    chains.push_back(std::move(chain));
  }

  BlockDecomposition out;
  ComplexMatrix v(n);
  std::size_t col = 0;
  for (const auto& chain : chains) {
    std::vector<int> sizes;
    for (std::size_t c : chain) {
      sizes.push_back(static_cast<int>(clusters[c].columns.size()));
      for (std::size_t src : clusters[c].columns) {
        for (std::size_t i = 0; i < n; ++i) v(i, col) = eig.vectors(i, src);
        ++col;
      }
    }
    out.block_sizes.push_back(std::move(sizes));
  }
  out.U = v.adjoint();
  const ComplexMatrix c = out.U * b * v;
  out.off_pattern_norm = distance(c, block_pattern(c, out.block_sizes));
  return out;
}

std::vector<WordViolation> bounded_word_check(const ComplexMatrix& b, int max_len, double tol,
                                              std::uint64_t budget) {
  if (max_len < 1) throw InvalidArgument("bounded_word_check: max_len must be >= 1");
  if (max_len > 62 || (std::uint64_t{1} << max_len) > budget / static_cast<std::uint64_t>(max_len))
    throw ComplexityLimit("bounded_word_check: 2^max_len * max_len exceeds the work budget");

  const double norm = b.frobenius_norm();
  std::vector<WordViolation> out;
  for (int len = 1; len <= max_len; ++len) {
    const double bound = tol * (1.0 + std::pow(norm, static_cast<double>(len)));
    for (int stars = 0; stars <= len; ++stars) {
      if (2 * stars == len) continue;
      enumerate_word_traces(
          b, len, stars,
          [&](const std::vector<Letter>& letters, cplx tr) {
            if (std::abs(tr) <= bound) return;
            Word w(letters);
            if (w.canonical_rotation() == w) out.push_back({std::move(w), tr});
          },
          budget);
    }
  }
  return out;
}

}  // namespace isopencil
