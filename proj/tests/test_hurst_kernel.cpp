#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <stdexcept>

#include "qnoise/hurst_profile.hpp"
#include "qnoise/memory_kernel.hpp"

using namespace qnoise;

TEST_CASE("sinusoidal hurst profile follows h0 + a sin(2 pi t / P)") {
  const HurstProfile p = HurstProfile::sinusoidal(0.3, 0.2, 1.0);
  REQUIRE(hurst_at(p, 0.0) == Catch::Approx(0.3).margin(1e-15));
  REQUIRE(hurst_at(p, 0.25) == Catch::Approx(0.5).margin(1e-12));

  const double period = 2.0;
  const HurstProfile q = HurstProfile::sinusoidal(0.7, 0.1, period);
  REQUIRE(hurst_at(q, period / 2.0) == Catch::Approx(0.7).margin(1e-12));
}

TEST_CASE("constant hurst profile ignores t") {
  const HurstProfile p = HurstProfile::constant(0.42);
  REQUIRE(hurst_at(p, 0.0) == 0.42);
  REQUIRE(hurst_at(p, 123.0) == 0.42);
}

TEST_CASE("hurst profile domain and range validation") {
  REQUIRE_THROWS_AS(hurst_at(HurstProfile::constant(0.5), -0.1), std::domain_error);
  REQUIRE_THROWS_AS(HurstProfile::constant(0.0), ValidationError);
  REQUIRE_THROWS_AS(HurstProfile::constant(1.0), ValidationError);
  // extrema h0 +/- |a| must stay inside (0,1)
  REQUIRE_THROWS_AS(HurstProfile::sinusoidal(0.9, 0.1, 1.0), ValidationError);
  REQUIRE_THROWS_AS(HurstProfile::sinusoidal(0.2, 0.2, 1.0), ValidationError);
  REQUIRE_NOTHROW(HurstProfile::sinusoidal(0.3, 0.2, 1.0));
  REQUIRE_THROWS_AS(HurstProfile::sinusoidal(0.5, 0.1, 0.0), ValidationError);
}

TEST_CASE("mmfbm kernel with H = 1/2 is the unit kernel") {
  const MemoryKernel k = MemoryKernel::mmfbm(HurstProfile::constant(0.5));
  REQUIRE(kernel_eval(k, 1.0, 0.3) == Catch::Approx(1.0).margin(1e-15));
  REQUIRE(kernel_eval(k, 2.0, 1.9999) == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("kernel is causal: zero at and beyond equal times") {
  const MemoryKernel k = MemoryKernel::mmfbm(HurstProfile::constant(0.7));
  REQUIRE(kernel_eval(k, 1.0, 1.0) == 0.0);
  REQUIRE(kernel_eval(k, 1.0, 1.5) == 0.0);
  const MemoryKernel p = MemoryKernel::power_law(1.0);
  REQUIRE(kernel_eval(p, 0.5, 0.5) == 0.0);
}

TEST_CASE("mmfbm kernel value at unit lag matches 1/Gamma(H + 1/2)") {
  // 1/Gamma(1.25), frozen from a high-precision gamma evaluation
  const double expected = 1.1032626513208372;
  const MemoryKernel k = MemoryKernel::mmfbm(HurstProfile::constant(0.75));
  REQUIRE(kernel_eval(k, 1.5, 0.5) == Catch::Approx(expected).epsilon(1e-12));

  // same exponent through a sinusoidal profile evaluated where sin vanishes
  const MemoryKernel ks =
      MemoryKernel::mmfbm(HurstProfile::sinusoidal(0.75, 0.05, 4.0));
  REQUIRE(kernel_eval(ks, 2.0, 1.0) == Catch::Approx(expected).epsilon(1e-12));
}

TEST_CASE("power-law kernel normalization and exponent") {
  // beta = 2: exponent 0, Gamma(1) = 1
  const MemoryKernel k2 = MemoryKernel::power_law(2.0);
  REQUIRE(kernel_eval(k2, 3.0, 1.0) == Catch::Approx(1.0).margin(1e-15));

  // beta = 1: K(lag) = lag^{-1/2} / Gamma(1/2)
  const MemoryKernel k1 = MemoryKernel::power_law(1.0);
  const double lag = 0.25;
  REQUIRE(kernel_eval(k1, 1.0, 1.0 - lag) ==
          Catch::Approx(std::pow(lag, -0.5) / std::sqrt(std::numbers::pi)).epsilon(1e-12));

  REQUIRE_THROWS_AS(MemoryKernel::power_law(0.0), std::domain_error);
  REQUIRE_THROWS_AS(MemoryKernel::power_law(-1.0), std::domain_error);
}

TEST_CASE("exponential cutoff damps the kernel multiplicatively") {
  const MemoryKernel bare = MemoryKernel::mmfbm(HurstProfile::constant(0.7));
  const MemoryKernel damped = MemoryKernel::mmfbm(HurstProfile::constant(0.7), 1.0);
  const double t = 3.0, s = 1.0;
  REQUIRE(kernel_eval(damped, t, s) ==
          Catch::Approx(kernel_eval(bare, t, s) * std::exp(-(t - s) / 1.0)).epsilon(1e-13));
  REQUIRE_THROWS_AS(MemoryKernel::power_law(1.0, -0.5), ValidationError);
}

TEST_CASE("kernel increment exponents: local H for mmfbm, 1/2 for power law") {
  const MemoryKernel m = MemoryKernel::mmfbm(HurstProfile::sinusoidal(0.3, 0.2, 1.0));
  REQUIRE(m.increment_exponent_at(0.25) == Catch::Approx(0.5).margin(1e-12));
  const MemoryKernel p = MemoryKernel::power_law(1.7);
  REQUIRE(p.increment_exponent_at(0.25) == 0.5);
}
