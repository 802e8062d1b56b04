#include "isopencil/word_trace.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>

#include "isopencil/errors.hpp"

namespace isopencil {
namespace {

std::uint64_t binomial(int k, int l) {
  if (l < 0 || l > k) return 0;
  l = std::min(l, k - l);
  std::uint64_t c = 1;
  for (int i = 1; i <= l; ++i) c = c * static_cast<std::uint64_t>(k - l + i) / i;
  return c;
}

void check_budget(std::uint64_t words, int length, std::uint64_t budget, const char* what) {
  if (length > 62 || words > budget / static_cast<std::uint64_t>(length)) {
    throw ComplexityLimit(std::string(what) + ": enumeration of length-" +
                          std::to_string(length) + " words exceeds the work budget");
  }
}

struct Enumerator {
  const ComplexMatrix& b;
  const ComplexMatrix bstar;
  int length;
  std::optional<int> bstar_count;
  const std::function<void(const std::vector<Letter>&, cplx)>& visit;
  std::vector<Letter> letters;
  std::vector<ComplexMatrix> prefix;  // prefix[d] = product of the first d+1 letters

  const ComplexMatrix& matrix(Letter l) const { return l == Letter::B ? b : bstar; }

  void descend(int depth, int stars_used) {
    for (Letter l : {Letter::B, Letter::BStar}) {
      const int stars = stars_used + (l == Letter::BStar ? 1 : 0);
      const int remaining = length - depth - 1;
      if (bstar_count) {
        if (stars > *bstar_count || stars + remaining < *bstar_count) continue;
      }
      letters[depth] = l;
      if (remaining == 0) {
        const cplx tr = depth == 0 ? trace(matrix(l)) : trace_of_product(prefix[depth - 1], matrix(l));
        visit(letters, tr);
        continue;
      }
      prefix[depth] = depth == 0 ? matrix(l) : prefix[depth - 1] * matrix(l);
      descend(depth + 1, stars);
    }
  }
};

}  // namespace

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw InvalidArgument("Word: length must be at least 1");
}

Word Word::parse(const std::string& text) {
  std::vector<Letter> letters;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == '.') continue;
    if (ch != 'B') throw InvalidArgument("Word::parse: unexpected character '" + std::string(1, ch) + "'");
    if (i + 1 < text.size() && text[i + 1] == '*') {
      letters.push_back(Letter::BStar);
      ++i;
    } else {
      letters.push_back(Letter::B);
    }
  }
  return Word(std::move(letters));
}

std::size_t Word::count(Letter l) const {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), l));
}

Word Word::rotated(std::size_t shift) const {
  std::vector<Letter> r(letters_);
  std::rotate(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(shift % r.size()), r.end());
  return Word(std::move(r));
}

Word Word::canonical_rotation() const {
  Word best = *this;
  for (std::size_t s = 1; s < length(); ++s) best = std::min(best, rotated(s));
  return best;
}

std::string Word::to_string() const {
  std::string s;
  for (Letter l : letters_) s += (l == Letter::B ? "B" : "B*");
  return s;
}

cplx trace_word(const ComplexMatrix& b, const Word& w) {
  const ComplexMatrix bstar = b.adjoint();
  const auto& ls = w.letters();
  auto pick = [&](Letter l) -> const ComplexMatrix& { return l == Letter::B ? b : bstar; };
  if (ls.size() == 1) return trace(pick(ls[0]));
  ComplexMatrix p = pick(ls[0]);
  for (std::size_t i = 1; i + 1 < ls.size(); ++i) p = p * pick(ls[i]);
  return trace_of_product(p, pick(ls.back()));
}

void enumerate_word_traces(const ComplexMatrix& b, int length, std::optional<int> bstar_count,
                           const std::function<void(const std::vector<Letter>&, cplx)>& visit,
                           std::uint64_t budget) {
  if (length < 1) throw InvalidArgument("enumerate_word_traces: length must be >= 1");
  if (bstar_count && (*bstar_count < 0 || *bstar_count > length))
    throw InvalidArgument("enumerate_word_traces: B* count out of range");
  const std::uint64_t words =
      bstar_count ? binomial(length, *bstar_count)
                  : (length >= 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << length));
  check_budget(words, length, budget, "enumerate_word_traces");

  Enumerator e{b, b.adjoint(), length, bstar_count, visit,
               std::vector<Letter>(static_cast<std::size_t>(length)),
               std::vector<ComplexMatrix>(static_cast<std::size_t>(length))};
  e.descend(0, 0);
}

cplx word_trace_sum(const ComplexMatrix& b, int k, int l, std::uint64_t budget) {
  if (k < 1 || l < 0 || l > k) throw InvalidArgument("word_trace_sum: need 1 <= k and 0 <= l <= k");
  check_budget(binomial(k, l), k, budget, "word_trace_sum");
  cplx sum{};
  enumerate_word_traces(
      b, k, l, [&](const std::vector<Letter>&, cplx tr) { sum += tr; }, budget);
  return sum;
}

WordConditionReport check_condition_ii(const ComplexMatrix& b, double tol, std::uint64_t budget) {
  if (!(tol > 0)) throw InvalidArgument("check_condition_ii: tol must be positive");
  WordConditionReport report;
  report.n = static_cast<int>(b.size());
  report.tol_used = tol;
  const double norm = b.frobenius_norm();
  for (int k = 1; k <= report.n; ++k) {
    const double scale = 1.0 + std::pow(norm, static_cast<double>(k));
    for (int l = 0; 2 * l < k; ++l) {
      const cplx s = word_trace_sum(b, k, l, budget);
      report.sums[{k, l}] = s;
      report.max_abs = std::max(report.max_abs, std::abs(s));
      report.max_scaled = std::max(report.max_scaled, std::abs(s) / scale);
      if (std::abs(s) > tol * scale) report.violations.emplace_back(k, l);
    }
  }
  report.satisfied = report.violations.empty();
  return report;
}

cplx fourier_coefficient_fk(const ComplexMatrix& b, int k, int m) {
  const int n = static_cast<int>(b.size());
  if (k < 1 || k > n) throw InvalidArgument("fourier_coefficient_fk: need 1 <= k <= n");
  if (std::abs(m) > k || (k - m) % 2 != 0)
    throw InvalidArgument("fourier_coefficient_fk: need |m| <= k and m = k (mod 2)");

  // Frequencies -k..k are distinct modulo 4k, so the sampled exponentials are
  // orthogonal and the least-squares fit reduces to a discrete projection.
  const int samples = 4 * k;
  const double two_k = std::pow(2.0, k);
  cplx acc{};
  for (int j = 0; j < samples; ++j) {
    const double t = 2.0 * std::numbers::pi * j / samples;
    const cplx f = two_k * trace_power(hermitian_part(b, t), k);
    acc += f * std::polar(1.0, -m * t);
  }
  return acc / static_cast<double>(samples);
}

bool spectra_equal_by_moments(const ComplexMatrix& m1, const ComplexMatrix& m2, double tol) {
  if (m1.size() != m2.size()) throw DimensionMismatch("spectra_equal_by_moments: dimension mismatch");
  if (!(tol > 0)) throw InvalidArgument("spectra_equal_by_moments: tol must be positive");
  const double norm = std::max(m1.frobenius_norm(), m2.frobenius_norm());
  for (std::size_t k = 1; k <= m1.size(); ++k) {
    const cplx d = trace_power(m1, static_cast<int>(k)) - trace_power(m2, static_cast<int>(k));
    if (std::abs(d) > tol * (1.0 + std::pow(norm, static_cast<double>(k)))) return false;
  }
  return true;
}

}  // namespace isopencil
