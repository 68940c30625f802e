#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "qnoise/ensemble.hpp"

using namespace qnoise;

namespace {

SdeSpec table_spec(const TimeGrid& grid, double sigma) {
  return SdeSpec(DriftSpec::coefficient(-0.1), sigma, 1.0,
                 MemoryKernel::mmfbm(HurstProfile::sinusoidal(0.3, 0.2, 1.0)), grid);
}

}  // namespace

TEST_CASE("zero diffusion gives identical trajectories and exactly zero std") {
  const TimeGrid grid(1.0, 100);
  EnsembleOptions opts;
  opts.n_traj = 7;
  opts.base_seed = 5;
  const EnsembleResult r = run_ensemble(table_spec(grid, 0.0), SdeIntegrator::MmfbmSde, opts);
  for (double s : r.stats.std) REQUIRE(s == 0.0);
  REQUIRE(r.stats.mean[0] == 1.0);
}

TEST_CASE("ensemble stats are bit-identical across thread counts and reruns") {
  const TimeGrid grid(1.0, 250);
  const SdeSpec spec = table_spec(grid, 0.2);

  EnsembleOptions serial;
  serial.n_traj = 10;
  serial.base_seed = 42;
  serial.threads = 1;
  EnsembleOptions parallel = serial;
  parallel.threads = 4;

  const EnsembleResult a = run_ensemble(spec, SdeIntegrator::MmfbmSde, serial);
  const EnsembleResult b = run_ensemble(spec, SdeIntegrator::MmfbmSde, parallel);
  const EnsembleResult c = run_ensemble(spec, SdeIntegrator::MmfbmSde, serial);
  REQUIRE(a.stats.mean == b.stats.mean);
  REQUIRE(a.stats.std == b.stats.std);
  REQUIRE(a.stats.mean == c.stats.mean);
  REQUIRE(a.stats.std == c.stats.std);
}

TEST_CASE("initial point of the ensemble is pinned to chi0") {
  const TimeGrid grid(1.0, 50);
  EnsembleOptions opts;
  opts.n_traj = 20;
  opts.base_seed = 1;
  const EnsembleResult r = run_ensemble(table_spec(grid, 0.3), SdeIntegrator::MmfbmSde, opts);
  REQUIRE(r.stats.mean[0] == 1.0);
  REQUIRE(r.stats.std[0] == 0.0);
  REQUIRE(r.stats.n_traj == 20);
}

TEST_CASE("keep_paths retains every trajectory in seed order") {
  const TimeGrid grid(1.0, 40);
  EnsembleOptions opts;
  opts.n_traj = 5;
  opts.base_seed = 11;
  opts.keep_paths = true;
  const SdeSpec spec = table_spec(grid, 0.2);
  const EnsembleResult r = run_ensemble(spec, SdeIntegrator::MmfbmSde, opts);
  REQUIRE(r.paths.size() == 5);
  for (std::size_t k = 0; k < 5; ++k) {
    const NoisePath direct = integrate_mmfbm_sde(spec, 11 + k);
    REQUIRE(r.paths[k].values == direct.values);
  }
}

TEST_CASE("memory OU ensemble mean tracks chi0 exp(-lambda t) within 3 SE") {
  const TimeGrid grid(1.0, 200);
  const SdeSpec spec(DriftSpec::relaxation(1.0), 0.5, 1.0, MemoryKernel::power_law(1.0),
                     grid);
  EnsembleOptions opts;
  opts.n_traj = 1000;
  opts.base_seed = 2024;
  const EnsembleResult r = run_ensemble(spec, SdeIntegrator::MemoryOu, opts);
  const double inv_sqrt_n = 1.0 / std::sqrt(1000.0);
  for (std::size_t i = 0; i <= grid.steps(); ++i) {
    const double expected = std::exp(-grid.time_at(i));
    const double se = r.stats.std[i] * inv_sqrt_n;
    REQUIRE(std::abs(r.stats.mean[i] - expected) <= 3.0 * se + 1e-12);
  }
}

TEST_CASE("run_ensemble rejects an empty ensemble") {
  const TimeGrid grid(1.0, 10);
  EnsembleOptions opts;
  opts.n_traj = 0;
  REQUIRE_THROWS_AS(run_ensemble(table_spec(grid, 0.1), SdeIntegrator::MmfbmSde, opts),
                    ValidationError);
}
