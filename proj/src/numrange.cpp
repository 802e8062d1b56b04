#include "isopencil/numrange.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "isopencil/eigen.hpp"
#include "isopencil/errors.hpp"

namespace isopencil {
namespace {

void check_samples(int samples, const char* what) {
  if (samples < 8) throw InvalidArgument(std::string(what) + ": samples must be >= 8");
}

void check_k(const ComplexMatrix& b, int k, const char* what) {
  if (k < 1 || k > static_cast<int>(b.size()))
    throw InvalidArgument(std::string(what) + ": need 1 <= k <= n");
}

// Sutherland-Hodgman step against {z : x cos(theta) + y sin(theta) <= bound}.
std::vector<cplx> clip(const std::vector<cplx>& poly, double theta, double bound) {
  std::vector<cplx> out;
  if (poly.empty()) return out;
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  auto excess = [&](cplx z) { return z.real() * c + z.imag() * s - bound; };
  out.reserve(poly.size() + 1);
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const cplx p = poly[i];
    const cplx q = poly[(i + 1) % poly.size()];
    const double dp = excess(p);
    const double dq = excess(q);
    if (dp <= 0.0) out.push_back(p);
    if ((dp <= 0.0) != (dq <= 0.0)) {
      const double f = dp / (dp - dq);
      out.push_back(p + f * (q - p));
    }
  }
  return out;
}

std::vector<cplx> dedupe(std::vector<cplx> poly, double eps) {
  std::vector<cplx> out;
  for (const cplx& z : poly)
    if (out.empty() || std::abs(z - out.back()) > eps) out.push_back(z);
  while (out.size() > 1 && std::abs(out.front() - out.back()) <= eps) out.pop_back();
  return out;
}

std::vector<cplx> intersect_half_planes(const std::vector<double>& thetas,
                                        const std::vector<double>& support, double box,
                                        double slack, double merge_eps) {
  std::vector<cplx> poly{{-box, -box}, {box, -box}, {box, box}, {-box, box}};
  for (std::size_t j = 0; j < thetas.size() && !poly.empty(); ++j)
    poly = clip(poly, thetas[j], support[j] + slack);
  return dedupe(std::move(poly), merge_eps);
}

RangeProfile profile_from_spectra(const ComplexMatrix& b, int k, std::vector<double> thetas,
                                  const std::vector<std::vector<double>>& spectra, double tol) {
  RangeProfile p;
  p.k = k;
  p.tol_used = tol;
  p.thetas = std::move(thetas);
  p.support.reserve(spectra.size());
  for (const auto& sp : spectra) p.support.push_back(sp[static_cast<std::size_t>(k - 1)]);

  const double scale = 1.0 + b.frobenius_norm();
  const auto [lo, hi] = std::minmax_element(p.support.begin(), p.support.end());
  p.disk_statistic = std::max(*hi - *lo, -*lo) / scale;
  p.is_disk_at_zero = (*hi - *lo) <= tol * scale && *lo >= -tol * scale;

  if (p.is_disk_at_zero) {
    const double mean =
        std::accumulate(p.support.begin(), p.support.end(), 0.0) / static_cast<double>(p.support.size());
    p.radius = std::max(mean, 0.0);
  } else {
    const double box = 2.0 * b.frobenius_norm();
    const auto poly = intersect_half_planes(p.thetas, p.support, box, tol * scale, 1e-12 * scale);
    if (!poly.empty()) p.radius = std::max(*lo, 0.0);
  }
  return p;
}

}  // namespace

std::vector<double> angle_grid(int samples) {
  std::vector<double> t(static_cast<std::size_t>(samples));
  for (int j = 0; j < samples; ++j) t[static_cast<std::size_t>(j)] = 2.0 * std::numbers::pi * j / samples;
  return t;
}

std::vector<std::vector<double>> spectra_on_grid(const ComplexMatrix& b, int samples) {
  std::vector<std::vector<double>> out;
  out.reserve(static_cast<std::size_t>(samples));
  for (double t : angle_grid(samples)) out.push_back(eigvals_hermitian(hermitian_part(b, t)));
  return out;
}

RangeProfile support_sweep(const ComplexMatrix& b, int k, int samples, double tol) {
  check_k(b, k, "support_sweep");
  check_samples(samples, "support_sweep");
  return profile_from_spectra(b, k, angle_grid(samples), spectra_on_grid(b, samples), tol);
}

std::vector<cplx> range_polygon(const ComplexMatrix& b, int k, int samples) {
  check_k(b, k, "range_polygon");
  check_samples(samples, "range_polygon");
  const auto thetas = angle_grid(samples);
  const auto spectra = spectra_on_grid(b, samples);
  std::vector<double> support;
  support.reserve(spectra.size());
  for (const auto& sp : spectra) support.push_back(sp[static_cast<std::size_t>(k - 1)]);
  const double norm = b.frobenius_norm();
  return intersect_half_planes(thetas, support, 2.0 * norm, 1e-13 * (1.0 + norm),
                               1e-12 * (1.0 + norm));
}

RankProfile rank_sweep(const ComplexMatrix& b, int samples, double rel_tol) {
  check_samples(samples, "rank_sweep");
  if (!(rel_tol > 0)) throw InvalidArgument("rank_sweep: rel_tol must be positive");
  RankProfile r;
  r.thetas = angle_grid(samples);
  r.threshold_margin_decades = std::numeric_limits<double>::infinity();
  const double log_tol = std::log10(rel_tol);
  for (double t : r.thetas) {
    std::vector<double> mags = eigvals_hermitian(hermitian_part(b, t));
    for (double& v : mags) v = std::abs(v);
    const double largest = mags.empty() ? 0.0 : *std::max_element(mags.begin(), mags.end());
    int rank = 0;
    if (largest > 0.0) {
      for (double v : mags) {
        if (v > rel_tol * largest) ++rank;
        const double ratio = v / largest;
        const double decades = ratio > 0.0 ? std::abs(std::log10(ratio) - log_tol)
                                           : std::numeric_limits<double>::infinity();
        r.threshold_margin_decades = std::min(r.threshold_margin_decades, decades);
      }
    }
    r.ranks.push_back(rank);
  }
  r.constant = std::adjacent_find(r.ranks.begin(), r.ranks.end(), std::not_equal_to<>()) == r.ranks.end();
  return r;
}

double direct_spectral_deviation(const ComplexMatrix& b, int samples) {
  check_samples(samples, "isospectral_check_direct");
  const auto spectra = spectra_on_grid(b, samples);
  const std::vector<double>& base = spectra.front();  // theta_0 = 0
  double worst = 0.0;
  for (const auto& sp : spectra)
    for (std::size_t i = 0; i < sp.size(); ++i) worst = std::max(worst, std::abs(sp[i] - base[i]));
  return worst / (1.0 + b.frobenius_norm());
}

bool isospectral_check_direct(const ComplexMatrix& b, int samples, double tol) {
  return direct_spectral_deviation(b, samples) <= tol;
}

ConditionIIIReport evaluate_condition_iii(const ComplexMatrix& b, int samples, double tol,
                                          double rank_tol) {
  check_samples(samples, "check_condition_iii");
  ConditionIIIReport rep;
  const int n = static_cast<int>(b.size());
  const auto thetas = angle_grid(samples);
  const auto spectra = spectra_on_grid(b, samples);
  bool disks = true;
  for (int k = 1; k <= (n + 1) / 2; ++k) {
    rep.profiles.push_back(profile_from_spectra(b, k, thetas, spectra, tol));
    disks = disks && rep.profiles.back().is_disk_at_zero;
    rep.disk_statistic = std::max(rep.disk_statistic, rep.profiles.back().disk_statistic);
  }
  rep.ranks = rank_sweep(b, samples, rank_tol);
  rep.satisfied = disks && rep.ranks.constant;
  return rep;
}

bool check_condition_iii(const ComplexMatrix& b, int samples, double tol) {
  return evaluate_condition_iii(b, samples, tol).satisfied;
}

bool check_corollary_small_n(const ComplexMatrix& b, int samples, double tol) {
  if (b.size() > 4) throw DimensionTooLarge("check_corollary_small_n: requires n <= 4");
  return is_nilpotent(b, tol) && support_sweep(b, 1, samples, tol).is_disk_at_zero;
}

}  // namespace isopencil
