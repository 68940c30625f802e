#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <vector>

#include "qnoise/mmfbm.hpp"
#include "qnoise/qubit.hpp"

using namespace qnoise;

namespace {

NoisePath constant_path(const TimeGrid& grid, double value) {
  return NoisePath(grid, std::vector<double>(grid.steps() + 1, value));
}

NoisePath fig5_like_noise(const TimeGrid& grid, std::uint64_t seed) {
  const MemoryKernel kernel =
      MemoryKernel::mmfbm(HurstProfile::sinusoidal(0.7, 0.1, grid.total_time()), 1.0);
  return generate_mmfbm(kernel, grid, seed);
}

}  // namespace

TEST_CASE("hamiltonian matrix entries and eigenstructure") {
  const QubitParams params(4.0, 1.5);

  SECTION("chi = 0 is diagonal with eigenvalues -/+ omega0/2") {
    const Matrix2c h = hamiltonian(params, 0.0);
    REQUIRE(h(0, 0) == complexd(-2.0, 0.0));
    REQUIRE(h(1, 1) == complexd(2.0, 0.0));
    REQUIRE(h(0, 1) == complexd(0.0, 0.0));
  }

  SECTION("eigenvalues are +/- sqrt((omega0/2)^2 + (delta chi)^2)") {
    const double chi = 0.8;
    const Matrix2c h = hamiltonian(params, chi);
    Eigen::SelfAdjointEigenSolver<Matrix2c> solver(h);
    const double expected = std::hypot(2.0, 1.5 * chi);
    REQUIRE(solver.eigenvalues()(0) == Catch::Approx(-expected).epsilon(1e-14));
    REQUIRE(solver.eigenvalues()(1) == Catch::Approx(expected).epsilon(1e-14));
  }

  SECTION("pure sigma_x limit: omega0 = 0, delta chi = 1") {
    const QubitParams bare(0.0, 1.0);
    const Matrix2c h = hamiltonian(bare, 1.0);
    Eigen::SelfAdjointEigenSolver<Matrix2c> solver(h);
    REQUIRE(solver.eigenvalues()(0) == Catch::Approx(-1.0).epsilon(1e-14));
    REQUIRE(solver.eigenvalues()(1) == Catch::Approx(1.0).epsilon(1e-14));
    // eigenvectors (|0> -/+ |1>)/sqrt(2) up to phase
    const Eigen::Vector2cd v = solver.eigenvectors().col(1);
    REQUIRE(std::abs(std::abs(v(0)) - 1.0 / std::sqrt(2.0)) < 1e-12);
    REQUIRE(std::abs(v(0) - v(1)) < 1e-12);  // symmetric eigenvector for +1
  }
}

TEST_CASE("unitary evolution matches the analytic Rabi oscillation") {
  const TimeGrid grid(5.0, 5000);
  const QubitParams params(2.0, 1.5);
  const double chi = 1.0;
  const UnitaryResult r = evolve_unitary(params, constant_path(grid, chi),
                                         QuantumState::ground(), Frame::Lab);
  const double rabi = std::hypot(0.5 * params.omega0, params.delta * chi);
  const double amp = std::pow(params.delta * chi / rabi, 2.0);
  for (std::size_t i = 0; i <= grid.steps(); ++i) {
    const double expected = amp * std::pow(std::sin(rabi * grid.time_at(i)), 2.0);
    REQUIRE(r.metrics.excited_population[i] == Catch::Approx(expected).margin(1e-8));
  }
}

TEST_CASE("sigma_z eigenstate is frozen when the coupling vanishes") {
  const TimeGrid grid(5.0, 2000);
  const QubitParams params(3.0, 0.0);
  const UnitaryResult r = evolve_unitary(params, fig5_like_noise(grid, 4),
                                         QuantumState::ground(), Frame::Lab);
  for (std::size_t i = 0; i <= grid.steps(); ++i) {
    REQUIRE(r.metrics.excited_population[i] == 0.0);
    REQUIRE(r.metrics.fidelity[i] == Catch::Approx(1.0).margin(1e-10));
  }
}

TEST_CASE("unitary steps preserve the norm to rounding over noisy paths") {
  const TimeGrid grid(5.0, 5000);
  const QubitParams params(2.0 * std::numbers::pi * 4500.0, 1.2);
  const UnitaryResult r =
      evolve_unitary(params, fig5_like_noise(grid, 9), QuantumState::plus(), Frame::Lab);
  for (const QuantumState& psi : r.states)
    REQUIRE(std::abs(psi.norm() - 1.0) < 1e-10);
}

TEST_CASE("quantum state validation rejects unnormalized amplitudes") {
  REQUIRE_THROWS_AS(QuantumState(1.0, 1.0), ValidationError);
  REQUIRE_NOTHROW(QuantumState::plus());
}

TEST_CASE("density matrix invariants are enforced") {
  Matrix2c bad_trace;
  bad_trace << complexd(0.8, 0.0), complexd(0.0, 0.0), complexd(0.0, 0.0),
      complexd(0.1, 0.0);
  REQUIRE_THROWS_AS(DensityMatrix(bad_trace), ValidationError);

  Matrix2c not_hermitian;
  not_hermitian << complexd(0.5, 0.0), complexd(0.2, 0.0), complexd(0.3, 0.0),
      complexd(0.5, 0.0);
  REQUIRE_THROWS_AS(DensityMatrix(not_hermitian), ValidationError);

  Matrix2c negative;
  negative << complexd(1.5, 0.0), complexd(0.0, 0.0), complexd(0.0, 0.0),
      complexd(-0.5, 0.0);
  REQUIRE_THROWS_AS(DensityMatrix(negative), ValidationError);

  REQUIRE_NOTHROW(DensityMatrix::pure(QuantumState::plus()));
}

TEST_CASE("lindblad parameters derive a nonnegative dephasing rate") {
  REQUIRE_THROWS_AS(LindbladParams(50.0, 120.0), ValidationError);
  REQUIRE_THROWS_AS(LindbladParams(0.0, 10.0), ValidationError);
  const LindbladParams lb(50.0, 30.0);
  REQUIRE(lb.pure_dephasing_rate() ==
          Catch::Approx(1.0 / 30.0 - 1.0 / 100.0).epsilon(1e-14));
}

TEST_CASE("lindblad amplitude damping: Pe(t) = exp(-t/T1)") {
  const TimeGrid grid(5.0, 5000);
  const QubitParams params(1.0, 0.0);
  const LindbladParams lb(50.0, 30.0);
  const LindbladResult r =
      evolve_lindblad(params, lb, constant_path(grid, 0.0),
                      DensityMatrix::pure(QuantumState::excited()), Frame::Rotating);
  for (std::size_t i = 0; i <= grid.steps(); ++i) {
    const double expected = std::exp(-grid.time_at(i) / 50.0);
    REQUIRE(r.metrics.excited_population[i] == Catch::Approx(expected).margin(1e-6));
  }
}

TEST_CASE("lindblad dephasing: C(t) = C(0) exp(-t/T2)") {
  const TimeGrid grid(5.0, 5000);
  const QubitParams params(1.0, 0.0);
  const LindbladParams lb(50.0, 30.0);
  const LindbladResult r =
      evolve_lindblad(params, lb, constant_path(grid, 0.0),
                      DensityMatrix::pure(QuantumState::plus()), Frame::Rotating);
  for (std::size_t i = 0; i <= grid.steps(); ++i) {
    const double expected = 0.5 * std::exp(-grid.time_at(i) / 30.0);
    REQUIRE(r.metrics.coherence[i] == Catch::Approx(expected).margin(1e-6));
  }
}

TEST_CASE("lindblad evolution keeps trace and positivity over a noisy run") {
  const TimeGrid grid(5.0, 2000);
  const QubitParams params(2.0 * std::numbers::pi * 4500.0, 1.0);
  const LindbladParams lb(50.0, 30.0);
  const LindbladResult r =
      evolve_lindblad(params, lb, fig5_like_noise(grid, 21),
                      DensityMatrix::pure(QuantumState::ground()), Frame::Rotating);
  for (const DensityMatrix& rho : r.states) {
    REQUIRE(std::abs(rho.trace_real() - 1.0) < 1e-9);
    REQUIRE(rho.min_eigenvalue() >= -1e-10);
  }
}

TEST_CASE("halving the integrator step changes lindblad metrics below 1e-6") {
  const TimeGrid coarse(2.0, 1000);
  const NoisePath noise = fig5_like_noise(coarse, 33);

  // same physical signal on the refined grid: each chi_i held for two steps
  const TimeGrid fine(2.0, 2000);
  std::vector<double> refined(fine.steps() + 1);
  for (std::size_t i = 0; i <= fine.steps(); ++i) refined[i] = noise.values[i / 2];
  const NoisePath noise_fine(fine, std::move(refined));

  const QubitParams params(1.0, 1.3);
  const LindbladParams lb(50.0, 30.0);
  const DensityMatrix rho0 = DensityMatrix::pure(QuantumState::ground());
  const LindbladResult a = evolve_lindblad(params, lb, noise, rho0, Frame::Rotating);
  const LindbladResult b = evolve_lindblad(params, lb, noise_fine, rho0, Frame::Rotating);
  for (std::size_t i = 0; i <= coarse.steps(); ++i) {
    REQUIRE(a.metrics.fidelity[i] ==
            Catch::Approx(b.metrics.fidelity[2 * i]).margin(1e-6));
    REQUIRE(a.metrics.coherence[i] ==
            Catch::Approx(b.metrics.coherence[2 * i]).margin(1e-6));
    REQUIRE(a.metrics.excited_population[i] ==
            Catch::Approx(b.metrics.excited_population[2 * i]).margin(1e-6));
  }
}

TEST_CASE("noise-off lindblad agrees with decoupled unitary evolution") {
  const TimeGrid grid(5.0, 1000);
  const QuantumState psi0(complexd(0.6, 0.0), complexd(0.0, 0.8));
  const QubitParams coupled(1.5, 1.0);
  const QubitParams decoupled(1.5, 0.0);
  const LindbladParams nearly_closed(1e12, 1e12);

  const LindbladResult lr =
      evolve_lindblad(coupled, nearly_closed, constant_path(grid, 0.0),
                      DensityMatrix::pure(psi0), Frame::Lab, psi0);
  const UnitaryResult ur =
      evolve_unitary(decoupled, fig5_like_noise(grid, 77), psi0, Frame::Lab);
  for (std::size_t i = 0; i <= grid.steps(); ++i)
    REQUIRE(lr.metrics.excited_population[i] ==
            Catch::Approx(ur.metrics.excited_population[i]).margin(1e-8));
}

TEST_CASE("ensemble metrics: identical runs give zero spread, single run passes through") {
  const TimeGrid grid(1.0, 200);
  const QubitParams params(2.0, 1.0);
  const UnitaryResult r = evolve_unitary(params, constant_path(grid, 0.5),
                                         QuantumState::ground(), Frame::Lab);

  SECTION("identical runs") {
    const std::vector<QubitMetrics> runs = {r.metrics, r.metrics, r.metrics};
    const MetricsEnsemble e = ensemble_metrics(runs);
    for (std::size_t i = 0; i <= grid.steps(); ++i) {
      REQUIRE(e.fidelity_std[i] == 0.0);
      REQUIRE(e.fidelity_mean[i] == r.metrics.fidelity[i]);
    }
  }

  SECTION("single run") {
    const std::vector<QubitMetrics> runs = {r.metrics};
    const MetricsEnsemble e = ensemble_metrics(runs);
    REQUIRE(e.pe_mean == r.metrics.excited_population);
    for (double s : e.pe_std) REQUIRE(s == 0.0);
  }

  SECTION("mismatched grids are rejected") {
    const TimeGrid other(1.0, 100);
    const UnitaryResult r2 = evolve_unitary(params, constant_path(other, 0.5),
                                            QuantumState::ground(), Frame::Lab);
    const std::vector<QubitMetrics> runs = {r.metrics, r2.metrics};
    REQUIRE_THROWS_AS(ensemble_metrics(runs), ValidationError);
  }
}

TEST_CASE("rotating frame drops the sigma_z term") {
  const TimeGrid grid(1.0, 500);
  const QubitParams params(1000.0, 2.0);
  // |0> under H = delta chi sigma_x rotates at rate delta*chi regardless of omega0
  const UnitaryResult r = evolve_unitary(params, constant_path(grid, 0.4),
                                         QuantumState::ground(), Frame::Rotating);
  for (std::size_t i = 0; i <= grid.steps(); ++i) {
    const double theta = params.delta * 0.4 * grid.time_at(i);
    REQUIRE(r.metrics.excited_population[i] ==
            Catch::Approx(std::pow(std::sin(theta), 2.0)).margin(1e-9));
  }
}
