#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

#include "qnoise/errors.hpp"

namespace qnoise {

inline double mean(std::span<const double> xs) {
  if (xs.empty()) throw ValidationError("mean: empty input");
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

/// Variance with the given degrees-of-freedom correction (0 = population).
inline double variance(std::span<const double> xs, std::size_t ddof = 0) {
  if (xs.size() <= ddof) throw ValidationError("variance: not enough samples");
  const double m = mean(xs);
  double acc = 0.0;
  for (double x : xs) acc += (x - m) * (x - m);
  return acc / static_cast<double>(xs.size() - ddof);
}

inline double sample_skewness(std::span<const double> xs) {
  const double m = mean(xs);
  double m2 = 0.0, m3 = 0.0;
  for (double x : xs) {
    const double d = x - m;
    m2 += d * d;
    m3 += d * d * d;
  }
  const double n = static_cast<double>(xs.size());
  m2 /= n;
  m3 /= n;
  return m3 / std::pow(m2, 1.5);
}

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_stderr = 0.0;
  double residual_std = 0.0;
};

/// Ordinary least squares y = intercept + slope * x.
inline LinearFit linear_fit(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2)
    throw ValidationError("linear_fit: need >= 2 paired samples");
  const double n = static_cast<double>(x.size());
  const double mx = mean(x);
  const double my = mean(y);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw ValidationError("linear_fit: degenerate abscissa");
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (fit.intercept + fit.slope * x[i]);
    ss_res += r * r;
  }
  if (x.size() > 2) {
    const double res_var = ss_res / (n - 2.0);
    fit.residual_std = std::sqrt(res_var);
    fit.slope_stderr = std::sqrt(res_var / sxx);
  }
  return fit;
}

/// Sample autocorrelation of a series at the given lag.
inline double lag_autocorrelation(std::span<const double> xs, std::size_t lag) {
  if (xs.size() <= lag + 1) throw ValidationError("lag_autocorrelation: series too short");
  const double m = mean(xs);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i + lag < xs.size(); ++i)
    num += (xs[i] - m) * (xs[i + lag] - m);
  for (double x : xs) den += (x - m) * (x - m);
  if (den == 0.0) throw ValidationError("lag_autocorrelation: constant series");
  return num / den;
}

namespace detail {
inline std::vector<double> ranks(std::span<const double> xs) {
  std::vector<std::size_t> order(xs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
  std::vector<double> rank(xs.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && xs[order[j + 1]] == xs[order[i]]) ++j;
    const double shared = 0.5 * static_cast<double>(i + j) + 1.0;  // ties share mean rank
    for (std::size_t k = i; k <= j; ++k) rank[order[k]] = shared;
    i = j + 1;
  }
  return rank;
}
}  // namespace detail

/// Spearman rank correlation (Pearson correlation of mid-ranks).
inline double spearman_correlation(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2)
    throw ValidationError("spearman_correlation: need >= 2 paired samples");
  const std::vector<double> rx = detail::ranks(x);
  const std::vector<double> ry = detail::ranks(y);
  const double mx = mean(rx), my = mean(ry);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0)
    throw ValidationError("spearman_correlation: constant input");
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace qnoise
