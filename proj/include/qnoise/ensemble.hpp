#pragma once

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "qnoise/parallel.hpp"
#include "qnoise/sde.hpp"

namespace qnoise {

/// Pointwise ensemble mean and standard deviation (sample std for n > 1).
struct EnsembleStats {
  TimeGrid grid;
  std::vector<double> mean;
  std::vector<double> std;
  std::size_t n_traj = 0;
};

struct EnsembleOptions {
  std::size_t n_traj = 1;
  std::uint64_t base_seed = 0;
  bool keep_paths = false;
  unsigned threads = 0;  // 0 = hardware concurrency
};

struct EnsembleResult {
  EnsembleStats stats;
  std::vector<NoisePath> paths;  // populated only when keep_paths is set
};

/// Accumulates pointwise mean/std with Welford updates applied in trajectory
/// order, so the result is independent of how the work was scheduled.
class WelfordAccumulator {
 public:
  explicit WelfordAccumulator(std::size_t size) : mean_(size, 0.0), m2_(size, 0.0) {}

  void add(const std::vector<double>& values) {
    ++count_;
    const double inv_n = 1.0 / static_cast<double>(count_);
    for (std::size_t i = 0; i < values.size(); ++i) {
      const double delta = values[i] - mean_[i];
      mean_[i] += delta * inv_n;
      m2_[i] += delta * (values[i] - mean_[i]);
    }
  }

  std::size_t count() const { return count_; }
  const std::vector<double>& mean() const { return mean_; }

  std::vector<double> sample_std() const {
    std::vector<double> out(m2_.size(), 0.0);
    if (count_ > 1) {
      const double inv = 1.0 / static_cast<double>(count_ - 1);
      for (std::size_t i = 0; i < m2_.size(); ++i) out[i] = std::sqrt(m2_[i] * inv);
    }
    return out;
  }

 private:
  std::size_t count_ = 0;
  std::vector<double> mean_;
  std::vector<double> m2_;
};

/// Runs n_traj independent trajectories, trajectory k seeded base_seed + k.
/// Deterministic for fixed (spec, options) regardless of thread count.
inline EnsembleResult run_ensemble(const SdeSpec& spec, SdeIntegrator integrator,
                                   const EnsembleOptions& options) {
  if (options.n_traj == 0) throw ValidationError("run_ensemble: n_traj must be >= 1");
  WelfordAccumulator acc(spec.grid.steps() + 1);
  EnsembleResult result{EnsembleStats{spec.grid, {}, {}, options.n_traj}, {}};
  if (options.keep_paths) result.paths.reserve(options.n_traj);

  ordered_parallel_map<NoisePath>(
      options.n_traj, options.threads,
      [&](std::size_t k) {
        return integrate_sde(spec, integrator,
                             options.base_seed + static_cast<std::uint64_t>(k));
      },
      [&](std::size_t, NoisePath&& path) {
        acc.add(path.values);
        if (options.keep_paths) result.paths.push_back(std::move(path));
      });

  result.stats.mean = acc.mean();
  result.stats.std = acc.sample_std();
  return result;
}

}  // namespace qnoise
