#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "qnoise/noise_path.hpp"
#include "qnoise/rng.hpp"
#include "qnoise/stats.hpp"
#include "qnoise/time_grid.hpp"

using namespace qnoise;

TEST_CASE("time grid samples the closed interval [0, T]") {
  const TimeGrid grid(1.0, 500);
  REQUIRE(grid.dt() == Catch::Approx(0.002));
  REQUIRE(grid.times().size() == 501);
  REQUIRE(grid.time_at(0) == 0.0);
  REQUIRE(grid.time_at(500) == 1.0);
  for (std::size_t i = 0; i < 500; ++i) REQUIRE(grid.time_at(i) < grid.time_at(i + 1));
}

TEST_CASE("time grid endpoint is exact for awkward step counts") {
  const TimeGrid grid(5.0e-4, 1999);
  REQUIRE(grid.time_at(0) == 0.0);
  REQUIRE(grid.time_at(1999) == 5.0e-4);
}

TEST_CASE("time grid rejects invalid parameters") {
  REQUIRE_THROWS_AS(TimeGrid(0.0, 10), ValidationError);
  REQUIRE_THROWS_AS(TimeGrid(-1.0, 10), ValidationError);
  REQUIRE_THROWS_AS(TimeGrid(1.0, 0), ValidationError);
}

TEST_CASE("wiener increments are a pure function of seed and grid") {
  const TimeGrid grid(1.0, 500);
  const WienerIncrements a = sample_wiener(grid, 42);
  const WienerIncrements b = sample_wiener(grid, 42);
  REQUIRE(a.values.size() == 500);
  REQUIRE(a.values == b.values);
  const WienerIncrements c = sample_wiener(grid, 43);
  REQUIRE(a.values != c.values);
}

TEST_CASE("wiener increment statistics match Normal(0, dt)") {
  const std::size_t n = 100000;
  const TimeGrid grid(10.0, n);
  const WienerIncrements w = sample_wiener(grid, 1234);

  // mean of n draws from N(0, dt) has std sqrt(dt/n); 4 sigma bound
  const double m = mean(w.values);
  REQUIRE(std::abs(m) < 4.0 * std::sqrt(grid.dt() / static_cast<double>(n)));

  // chi-square concentration: variance/dt within 5% at n = 1e5
  const double v = variance(w.values, 1);
  REQUIRE(v / grid.dt() > 0.95);
  REQUIRE(v / grid.dt() < 1.05);
}

TEST_CASE("box-muller normals have sane tails and moments") {
  const std::vector<double> z = standard_normals(200000, 7);
  REQUIRE(std::abs(mean(z)) < 0.01);
  REQUIRE(variance(z, 1) == Catch::Approx(1.0).margin(0.02));
  REQUIRE(std::abs(sample_skewness(z)) < 0.03);
}
