#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isopencil/matrix.hpp"

namespace isopencil {

enum class Letter : std::uint8_t { B = 0, BStar = 1 };

/// A nonempty product string over {B, B^*}.
class Word {
 public:
  explicit Word(std::vector<Letter> letters);

  /// Parses "BBB*B" style text; whitespace and '.' separators are ignored.
  static Word parse(const std::string& text);

  std::size_t length() const { return letters_.size(); }
  std::size_t count(Letter l) const;
  const std::vector<Letter>& letters() const { return letters_; }

  Word rotated(std::size_t shift) const;
  /// Lexicographically least rotation (B < B^*).
  Word canonical_rotation() const;

  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Work ceiling for word enumeration, in matrix-product units (words x length).
/// The default admits every (k, l) with k <= 20.
inline constexpr std::uint64_t kDefaultWordBudget = 4'000'000;

/// Tr w(B, B^*), letters multiplied left to right.
cplx trace_word(const ComplexMatrix& b, const Word& w);

/// Visits every word of the given length (restricted to exactly bstar_count
/// B^* letters when set) together with its trace. Prefix products are shared
/// depth-first. Throws ComplexityLimit when (#words * length) > budget.
void enumerate_word_traces(const ComplexMatrix& b, int length, std::optional<int> bstar_count,
                           const std::function<void(const std::vector<Letter>&, cplx)>& visit,
                           std::uint64_t budget = kDefaultWordBudget);

/// Sum of Tr w(B, B^*) over the C(k, l) words of length k with l letters B^*.
cplx word_trace_sum(const ComplexMatrix& b, int k, int l,
                    std::uint64_t budget = kDefaultWordBudget);

struct WordConditionReport {
  int n = 0;
  std::map<std::pair<int, int>, cplx> sums;  // (k, l) -> word sum
  double max_abs = 0.0;                       // max |sum|
  double max_scaled = 0.0;                    // max |sum| / (1 + ||B||_F^k)
  std::vector<std::pair<int, int>> violations;  // (k, l) ascending
  bool satisfied = true;
  double tol_used = 0.0;
};

inline constexpr double kWordTol = 1e-9;

/// Every word sum with 1 <= k <= n, 0 <= l < k/2 must vanish to
/// tol (1 + ||B||_F^k).
WordConditionReport check_condition_ii(const ComplexMatrix& b, double tol = kWordTol,
                                       std::uint64_t budget = kDefaultWordBudget);

/// Coefficient of e^{imt} in f_k(t) = 2^k Tr H(t)^k, recovered from 4k
/// equispaced samples. Requires 1 <= k <= n, |m| <= k, m = k (mod 2).
cplx fourier_coefficient_fk(const ComplexMatrix& b, int k, int m);

/// Compares Tr M1^j and Tr M2^j for j = 1..n.
bool spectra_equal_by_moments(const ComplexMatrix& m1, const ComplexMatrix& m2, double tol);

}  // namespace isopencil
