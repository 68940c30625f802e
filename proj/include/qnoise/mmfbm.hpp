#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "qnoise/memory_kernel.hpp"
#include "qnoise/noise_path.hpp"
#include "qnoise/rng.hpp"
#include "qnoise/time_grid.hpp"

namespace qnoise {

/// Memory multi-fractional Brownian motion driver, discretized as a causal
/// sum over past Gaussian increments:
///
///   M(t_i) = sum_{j<i} K(t_i, t_j) * xi_j * dt^{h_j},   M(0) = 0,
///
/// with h_j the kernel's increment exponent at the increment's own time t_j
/// (H(t_j) for the mmfbm kernel, 1/2 for the Wiener-driven power law). The
/// j = i term is excluded, so the kernel is never evaluated at zero lag.
/// Cost is O(N^2); lag-only kernels use a precomputed kernel row.
inline NoisePath generate_mmfbm_from_normals(const MemoryKernel& kernel,
                                             const TimeGrid& grid,
                                             std::span<const double> normals) {
  const std::size_t n = grid.steps();
  if (normals.size() != n)
    throw ValidationError("generate_mmfbm: need exactly steps normal deviates");
  const double dt = grid.dt();

  std::vector<double> scaled(n);
  for (std::size_t j = 0; j < n; ++j)
    scaled[j] = normals[j] * std::pow(dt, kernel.increment_exponent_at(grid.time_at(j)));

  std::vector<double> values(n + 1, 0.0);
  if (kernel.is_stationary()) {
    // K(t_i, t_j) = row[i-j], with the lag measured on the grid times.
    std::vector<double> row(n + 1, 0.0);
    for (std::size_t l = 1; l <= n; ++l) row[l] = kernel.eval_lag(grid.time_at(l), 0.0);
    for (std::size_t i = 1; i <= n; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < i; ++j) acc += row[i - j] * scaled[j];
      values[i] = acc;
    }
  } else {
    std::vector<double> log_lag(n + 1, 0.0);
    std::vector<double> damp(n + 1, 1.0);
    for (std::size_t l = 1; l <= n; ++l) {
      log_lag[l] = std::log(grid.time_at(l));
      if (kernel.cutoff()) damp[l] = std::exp(-grid.time_at(l) / *kernel.cutoff());
    }
    for (std::size_t i = 1; i <= n; ++i) {
      const double t = grid.time_at(i);
      const double p = kernel.lag_exponent_at(t);
      const double norm = kernel.normalization_at(t);
      double acc = 0.0;
      for (std::size_t j = 0; j < i; ++j) {
        const std::size_t l = i - j;
        acc += std::exp(p * log_lag[l]) * damp[l] * scaled[j];
      }
      values[i] = norm * acc;
    }
  }
  return NoisePath(grid, std::move(values));
}

inline NoisePath generate_mmfbm(const MemoryKernel& kernel, const TimeGrid& grid,
                                std::uint64_t seed) {
  return generate_mmfbm_from_normals(kernel, grid, standard_normals(grid.steps(), seed));
}

}  // namespace qnoise
