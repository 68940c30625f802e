#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "qnoise/sde.hpp"
#include "qnoise/stats.hpp"

using namespace qnoise;

namespace {

SdeSpec ou_spec(double lambda, double sigma_phi, double chi0, double beta,
                const TimeGrid& grid) {
  return SdeSpec(DriftSpec::relaxation(lambda), sigma_phi, chi0,
                 MemoryKernel::power_law(beta), grid);
}

}  // namespace

TEST_CASE("noise-free mmfbm sde recovers the exponential drift solution") {
  const TimeGrid grid(1.0, 500);
  const SdeSpec spec(DriftSpec::coefficient(-0.1), 0.0, 1.0,
                     MemoryKernel::mmfbm(HurstProfile::sinusoidal(0.3, 0.2, 1.0)), grid);
  const NoisePath chi = integrate_mmfbm_sde(spec, 42);
  REQUIRE(std::abs(chi.values.back() - 0.90483741803595957) < 2e-3);
}

TEST_CASE("zero dynamics keep chi constant") {
  const TimeGrid grid(1.0, 100);
  const SdeSpec spec(DriftSpec::relaxation(0.0), 0.0, 0.5,
                     MemoryKernel::mmfbm(HurstProfile::constant(0.5)), grid);
  const NoisePath chi = integrate_mmfbm_sde(spec, 3);
  for (double v : chi.values) REQUIRE(v == 0.5);
}

TEST_CASE("noise-free memory OU recovers chi0 exp(-lambda t)") {
  const TimeGrid grid(1.0, 500);
  const NoisePath chi = integrate_memory_ou(ou_spec(2.0, 0.0, 0.5, 1.0, grid), 9);
  REQUIRE(std::abs(chi.values.back() - 0.067667641618306346) < 1e-3);
}

TEST_CASE("integrators validate their kernel family") {
  const TimeGrid grid(1.0, 50);
  const SdeSpec mm(DriftSpec::relaxation(1.0), 1.0, 0.5,
                   MemoryKernel::mmfbm(HurstProfile::constant(0.5)), grid);
  const SdeSpec pl = ou_spec(1.0, 1.0, 0.5, 1.0, grid);
  REQUIRE_THROWS_AS(integrate_memory_ou(mm, 1), ValidationError);
  REQUIRE_THROWS_AS(integrate_mmfbm_sde(pl, 1), ValidationError);
  REQUIRE_THROWS_AS(SdeSpec(DriftSpec::relaxation(1.0), -0.1, 0.5,
                            MemoryKernel::power_law(1.0), grid),
                    ValidationError);
  REQUIRE_THROWS_AS(DriftSpec::relaxation(-1.0), ValidationError);
}

TEST_CASE("sigma_phi enters linearly: doubling scales the deviation bit-exactly") {
  const TimeGrid grid(1.0, 400);
  // chi0 = 0 makes the whole recursion homogeneous in the amplitude.
  const NoisePath one = integrate_memory_ou(ou_spec(1.5, 1.0, 0.0, 1.0, grid), 17);
  const NoisePath two = integrate_memory_ou(ou_spec(1.5, 2.0, 0.0, 1.0, grid), 17);
  for (std::size_t i = 0; i < one.values.size(); ++i)
    REQUIRE(two.values[i] == 2.0 * one.values[i]);
}

TEST_CASE("sigma_phi linearity holds to rounding for general factors") {
  const TimeGrid grid(1.0, 400);
  const NoisePath base = integrate_memory_ou(ou_spec(1.5, 1.0, 1.0, 1.0, grid), 23);
  const NoisePath scaled = integrate_memory_ou(ou_spec(1.5, 3.0, 1.0, 1.0, grid), 23);
  const NoisePath det = integrate_memory_ou(ou_spec(1.5, 0.0, 1.0, 1.0, grid), 23);
  for (std::size_t i = 0; i < base.values.size(); ++i) {
    const double dev1 = base.values[i] - det.values[i];
    const double dev3 = scaled.values[i] - det.values[i];
    REQUIRE(dev3 == Catch::Approx(3.0 * dev1).margin(1e-10));
  }
}

TEST_CASE("initial-condition differences decay geometrically for the same seed") {
  const TimeGrid grid(1.0, 500);
  const NoisePath a = integrate_memory_ou(ou_spec(2.0, 3.0, 1.0, 1.0, grid), 31);
  const NoisePath b = integrate_memory_ou(ou_spec(2.0, 3.0, 0.3, 1.0, grid), 31);
  const double factor = 1.0 - 2.0 * grid.dt();
  double expected = 0.7;
  for (std::size_t i = 0; i <= grid.steps(); ++i) {
    REQUIRE(a.values[i] - b.values[i] == Catch::Approx(expected).margin(1e-10));
    expected *= factor;
  }
}

TEST_CASE("stronger relaxation damps the deterministic path pointwise") {
  const TimeGrid grid(1.0, 200);
  const NoisePath slow = integrate_memory_ou(ou_spec(0.5, 0.0, 0.8, 1.0, grid), 1);
  const NoisePath mid = integrate_memory_ou(ou_spec(1.0, 0.0, 0.8, 1.0, grid), 1);
  const NoisePath fast = integrate_memory_ou(ou_spec(2.0, 0.0, 0.8, 1.0, grid), 1);
  for (std::size_t i = 1; i <= grid.steps(); ++i) {
    REQUIRE(std::abs(fast.values[i]) <= std::abs(mid.values[i]));
    REQUIRE(std::abs(mid.values[i]) <= std::abs(slow.values[i]));
  }
}

TEST_CASE("memory depth: lag autocorrelation of the noise integral grows with beta") {
  const TimeGrid grid(1.0, 1000);
  const std::size_t n_seeds = 50;
  const std::size_t lag = 10;
  std::vector<double> mean_r;
  for (const double beta : {0.5, 1.0, 1.5}) {
    const MemoryKernel kernel = MemoryKernel::power_law(beta);
    double acc = 0.0;
    for (std::size_t k = 0; k < n_seeds; ++k) {
      const NoisePath integral = generate_mmfbm(kernel, grid, 5000 + k);
      acc += lag_autocorrelation(integral.values, lag);
    }
    mean_r.push_back(acc / static_cast<double>(n_seeds));
  }
  REQUIRE(mean_r[0] < mean_r[1]);
  REQUIRE(mean_r[1] < mean_r[2]);
}
