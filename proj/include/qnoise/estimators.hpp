#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "qnoise/errors.hpp"
#include "qnoise/noise_path.hpp"
#include "qnoise/stats.hpp"
#include "qnoise/time_grid.hpp"

namespace qnoise {

/// Gaussian free-induction-decay fit, model F(t) = exp(-(t/t2_star)^2).
struct DecayFit {
  double t2_star = 0.0;
  double stderr = 0.0;
  double window_lo = 0.0;
  double window_hi = 0.0;
};

/// Regresses -ln F against t^2 on the window; t2_star = 1/sqrt(slope).
/// Rejects non-decaying input (slope <= 0).
inline DecayFit fit_gaussian_decay(const TimeGrid& grid, std::span<const double> fidelity,
                                   double window_lo, double window_hi) {
  if (fidelity.size() != grid.steps() + 1)
    throw ValidationError("fit_gaussian_decay: fidelity length must match grid");
  if (!(window_hi > window_lo))
    throw ValidationError("fit_gaussian_decay: empty fit window");
  std::vector<double> t_sq, neg_log_f;
  for (std::size_t i = 0; i <= grid.steps(); ++i) {
    const double t = grid.time_at(i);
    if (t < window_lo || t > window_hi) continue;
    const double f = fidelity[i];
    if (!(f > 0.0) || f > 1.0)
      throw ValidationError("fit_gaussian_decay: fidelity must lie in (0,1] on window");
    t_sq.push_back(t * t);
    neg_log_f.push_back(-std::log(f));
  }
  if (t_sq.size() < 3)
    throw ValidationError("fit_gaussian_decay: need >= 3 points in window");
  const LinearFit fit = linear_fit(t_sq, neg_log_f);
  if (!(fit.slope > 0.0))
    throw FitRejectedError("fit_gaussian_decay: input is not decaying");
  DecayFit out;
  out.t2_star = 1.0 / std::sqrt(fit.slope);
  out.stderr = 0.5 * std::pow(fit.slope, -1.5) * fit.slope_stderr;
  out.window_lo = window_lo;
  out.window_hi = window_hi;
  return out;
}

struct HurstEstimate {
  double h_hat = 0.0;
  double stderr = 0.0;
};

/// Aggregated-variance estimate: Var of m-step path increments scales as
/// m^{2H}, so the log-log slope across dyadic scales m = 1,2,4,...,N/8
/// gives 2*H_hat.
inline HurstEstimate estimate_hurst(const NoisePath& path) {
  const std::vector<double>& v = path.values;
  if (v.size() < 1024)
    throw ValidationError("estimate_hurst: need at least 2^10 path samples");
  const std::size_t n_inc = v.size() - 1;

  const auto [lo_it, hi_it] = std::minmax_element(v.begin(), v.end());
  const double range = *hi_it - *lo_it;
  const double degenerate_floor = 1e-20 * std::max(range * range, 1e-300);

  std::vector<double> log_scale, log_var;
  for (std::size_t m = 1; m <= n_inc / 8; m *= 2) {
    const std::size_t blocks = n_inc / m;
    std::vector<double> agg(blocks);
    for (std::size_t j = 0; j < blocks; ++j) agg[j] = v[(j + 1) * m] - v[j * m];
    const double var_m = variance(agg, 1);
    if (!(var_m > degenerate_floor))
      throw ValidationError("estimate_hurst: degenerate variance at scale " +
                            std::to_string(m));
    log_scale.push_back(std::log(static_cast<double>(m)));
    log_var.push_back(std::log(var_m));
  }
  if (log_scale.size() < 3)
    throw ValidationError("estimate_hurst: not enough dyadic scales");
  const LinearFit fit = linear_fit(log_scale, log_var);
  return HurstEstimate{0.5 * fit.slope, 0.5 * fit.slope_stderr};
}

}  // namespace qnoise
