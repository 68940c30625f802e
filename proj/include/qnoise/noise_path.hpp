#pragma once

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "qnoise/rng.hpp"
#include "qnoise/time_grid.hpp"

namespace qnoise {

/// A scalar process sampled at every grid point (N+1 values).
struct NoisePath {
  TimeGrid grid;
  std::vector<double> values;

  NoisePath(TimeGrid g, std::vector<double> v) : grid(std::move(g)), values(std::move(v)) {
    if (values.size() != grid.steps() + 1)
      throw ValidationError("NoisePath: need exactly steps+1 values");
  }
};

/// N Wiener increments over the grid: values[i] ~ Normal(0, dt), a pure
/// function of (seed, grid).
struct WienerIncrements {
  TimeGrid grid;
  std::uint64_t seed;
  std::vector<double> values;
};

inline WienerIncrements sample_wiener(const TimeGrid& grid, std::uint64_t seed) {
  const double sqrt_dt = std::sqrt(grid.dt());
  std::vector<double> values = standard_normals(grid.steps(), seed);
  for (double& v : values) v *= sqrt_dt;
  return WienerIncrements{grid, seed, std::move(values)};
}

}  // namespace qnoise
