#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qnoise/errors.hpp"
#include "qnoise/noise_path.hpp"
#include "qnoise/parallel.hpp"
#include "qnoise/time_grid.hpp"

namespace qnoise {

using Matrix2c = Eigen::Matrix2cd;
using complexd = std::complex<double>;

/// Two-level system parameters. Times are microseconds throughout, so omega0
/// and delta are rad/us. ej_ec_ratio and delta_ng are recorded device
/// metadata and do not enter the dynamics.
struct QubitParams {
  double omega0;
  double delta;
  double ej_ec_ratio = 50.0;
  double delta_ng = 0.1;

  QubitParams(double omega0_, double delta_, double ej_ec = 50.0, double dng = 0.1)
      : omega0(omega0_), delta(delta_), ej_ec_ratio(ej_ec), delta_ng(dng) {
    // omega0 = 0 is admitted for the pure-sigma_x limit.
    if (!(omega0 >= 0.0)) throw ValidationError("QubitParams: omega0 must be >= 0");
    if (!std::isfinite(delta)) throw ValidationError("QubitParams: delta must be finite");
  }
};

/// Lab frame keeps the -omega0/2 sigma_z term; Rotating drops it, leaving
/// only the noise coupling delta*chi(t)*sigma_x.
enum class Frame { Lab, Rotating };

inline const char* frame_name(Frame f) { return f == Frame::Lab ? "lab" : "rotating"; }

class QuantumState {
 public:
  QuantumState(complexd a0, complexd a1) : a0_(a0), a1_(a1) {
    const double norm_sq = std::norm(a0_) + std::norm(a1_);
    if (std::abs(norm_sq - 1.0) > 1e-10)
      throw ValidationError("QuantumState: amplitudes must be normalized");
  }

  static QuantumState ground() { return QuantumState(1.0, 0.0); }
  static QuantumState excited() { return QuantumState(0.0, 1.0); }
  static QuantumState plus() {
    const double r = 1.0 / std::sqrt(2.0);
    return QuantumState(r, r);
  }

  complexd a0() const { return a0_; }
  complexd a1() const { return a1_; }
  double norm() const { return std::sqrt(std::norm(a0_) + std::norm(a1_)); }

 private:
  complexd a0_, a1_;
};

class DensityMatrix {
 public:
  explicit DensityMatrix(const Matrix2c& rho) : rho_(rho) {
    if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
      throw ValidationError("DensityMatrix: not Hermitian");
    if (std::abs(rho_.trace().real() - 1.0) > 1e-9 || std::abs(rho_.trace().imag()) > 1e-9)
      throw ValidationError("DensityMatrix: trace must be 1");
    if (min_eigenvalue() < -1e-10)
      throw ValidationError("DensityMatrix: negative eigenvalue");
  }

  static DensityMatrix pure(const QuantumState& psi) {
    Eigen::Vector2cd v;
    v << psi.a0(), psi.a1();
    return DensityMatrix(v * v.adjoint());
  }

  const Matrix2c& matrix() const { return rho_; }
  double trace_real() const { return rho_.trace().real(); }
  double coherence() const { return std::abs(rho_(0, 1)); }
  double excited_population() const { return rho_(1, 1).real(); }

  /// Smaller eigenvalue of a Hermitian 2x2, in closed form.
  double min_eigenvalue() const {
    const double half_trace = 0.5 * rho_.trace().real();
    const double half_gap = 0.5 * (rho_(0, 0).real() - rho_(1, 1).real());
    return half_trace - std::sqrt(half_gap * half_gap + std::norm(rho_(0, 1)));
  }

 private:
  Matrix2c rho_;
};

/// Relaxation/dephasing channel times; t2 <= 2*t1 keeps the derived pure
/// dephasing rate nonnegative.
struct LindbladParams {
  double t1;
  double t2;

  LindbladParams(double t1_, double t2_) : t1(t1_), t2(t2_) {
    if (!(t1 > 0.0) || !(t2 > 0.0))
      throw ValidationError("LindbladParams: t1 and t2 must be > 0");
    if (t2 > 2.0 * t1)
      throw ValidationError("LindbladParams: t2 must satisfy t2 <= 2*t1");
  }

  double pure_dephasing_rate() const { return 1.0 / t2 - 0.5 / t1; }
};

/// Fidelity against the reference state, coherence |rho01|, and excited-state
/// population, sampled at every grid point.
struct QubitMetrics {
  TimeGrid grid;
  std::vector<double> fidelity;
  std::vector<double> coherence;
  std::vector<double> excited_population;
};

/// H = [[-omega0/2, delta*chi], [delta*chi, omega0/2]].
inline Matrix2c hamiltonian(const QubitParams& params, double chi) {
  Matrix2c h;
  const double coupling = params.delta * chi;
  h << complexd(-0.5 * params.omega0, 0.0), complexd(coupling, 0.0),
      complexd(coupling, 0.0), complexd(0.5 * params.omega0, 0.0);
  return h;
}

namespace detail {

inline double effective_omega0(const QubitParams& params, Frame frame) {
  return frame == Frame::Lab ? params.omega0 : 0.0;
}

inline double clamp_unit(double x) { return x < 0.0 ? 0.0 : (x > 1.0 ? 1.0 : x); }

struct MetricsRecorder {
  const QuantumState& reference;
  QubitMetrics& metrics;

  void record(std::size_t i, complexd a0, complexd a1) const {
    const complexd overlap = std::conj(reference.a0()) * a0 + std::conj(reference.a1()) * a1;
    metrics.fidelity[i] = clamp_unit(std::norm(overlap));
    metrics.coherence[i] = clamp_unit(std::abs(a0 * std::conj(a1)));
    metrics.excited_population[i] = clamp_unit(std::norm(a1));
  }
};

}  // namespace detail

struct UnitaryResult {
  std::vector<QuantumState> states;
  QubitMetrics metrics;
};

/// Piecewise-exact unitary evolution: each step applies the closed-form 2x2
/// exponential exp(-i H(chi_i) dt), so the state norm is preserved to
/// rounding regardless of dt.
inline UnitaryResult evolve_unitary(const QubitParams& params, const NoisePath& noise,
                                    const QuantumState& psi0, Frame frame = Frame::Lab) {
  const TimeGrid& grid = noise.grid;
  const std::size_t n = grid.steps();
  const double dt = grid.dt();
  const double nz = -0.5 * detail::effective_omega0(params, frame);

  QubitMetrics metrics{grid, std::vector<double>(n + 1), std::vector<double>(n + 1),
                       std::vector<double>(n + 1)};
  detail::MetricsRecorder recorder{psi0, metrics};

  std::vector<QuantumState> states;
  states.reserve(n + 1);
  complexd a0 = psi0.a0(), a1 = psi0.a1();
  states.push_back(psi0);
  recorder.record(0, a0, a1);

  for (std::size_t i = 0; i < n; ++i) {
    const double nx = params.delta * noise.values[i];
    const double mag = std::hypot(nx, nz);
    if (mag > 0.0) {
      const double theta = mag * dt;
      const double c = std::cos(theta);
      const double s = std::sin(theta);
      const double ux = nx / mag;
      const double uz = nz / mag;
      // U = cos(theta) I - i sin(theta) (ux sigma_x + uz sigma_z)
      const complexd b0 = c * a0 - complexd(0.0, s) * (uz * a0 + ux * a1);
      const complexd b1 = c * a1 - complexd(0.0, s) * (ux * a0 - uz * a1);
      a0 = b0;
      a1 = b1;
    }
    states.emplace_back(a0, a1);
    recorder.record(i + 1, a0, a1);
  }
  return UnitaryResult{std::move(states), std::move(metrics)};
}

namespace detail {

/// Right-hand side of the master equation with sigma_- relaxation at rate
/// 1/t1 and pure dephasing at rate gamma_phi (Lindblad operator sigma_z/sqrt2).
inline Matrix2c lindblad_rhs(const Matrix2c& rho, const Matrix2c& h, double inv_t1,
                             double gamma_phi) {
  const complexd i_unit(0.0, 1.0);
  Matrix2c out = -i_unit * (h * rho - rho * h);

  // sigma_- rho sigma_+ = rho11 |0><0|; {sigma_+ sigma_-, rho}/2 couples row/col 1.
  out(0, 0) += inv_t1 * rho(1, 1).real();
  out(1, 1) -= inv_t1 * rho(1, 1).real();
  out(0, 1) -= 0.5 * inv_t1 * rho(0, 1);
  out(1, 0) -= 0.5 * inv_t1 * rho(1, 0);

  // (gamma_phi/2) (sigma_z rho sigma_z - rho): kills off-diagonals only.
  out(0, 1) -= gamma_phi * rho(0, 1);
  out(1, 0) -= gamma_phi * rho(1, 0);
  return out;
}

}  // namespace detail

struct LindbladResult {
  std::vector<DensityMatrix> states;
  QubitMetrics metrics;
};

/// Classical RK4 on the Lindblad master equation with the noise path held
/// piecewise-constant over each step; Hermiticity is restored by
/// symmetrization after every step. The fidelity reference defaults to the
/// dominant eigenvector of rho0.
inline LindbladResult evolve_lindblad(const QubitParams& params, const LindbladParams& lb,
                                      const NoisePath& noise, const DensityMatrix& rho0,
                                      Frame frame = Frame::Lab,
                                      std::optional<QuantumState> reference = std::nullopt) {
  const TimeGrid& grid = noise.grid;
  const std::size_t n = grid.steps();
  const double dt = grid.dt();
  const double omega_eff = detail::effective_omega0(params, frame);
  const double inv_t1 = 1.0 / lb.t1;
  const double gamma_phi = lb.pure_dephasing_rate();

  QuantumState ref = reference.value_or([&] {
    Eigen::SelfAdjointEigenSolver<Matrix2c> solver(rho0.matrix());
    const Eigen::Vector2cd v = solver.eigenvectors().col(1);  // largest eigenvalue
    return QuantumState(v(0), v(1));
  }());
  Eigen::Vector2cd ref_vec;
  ref_vec << ref.a0(), ref.a1();

  QubitMetrics metrics{grid, std::vector<double>(n + 1), std::vector<double>(n + 1),
                       std::vector<double>(n + 1)};
  std::vector<DensityMatrix> states;
  states.reserve(n + 1);

  auto record = [&](std::size_t i, const Matrix2c& rho) {
    metrics.fidelity[i] = detail::clamp_unit((ref_vec.adjoint() * rho * ref_vec)(0).real());
    metrics.coherence[i] = detail::clamp_unit(std::abs(rho(0, 1)));
    metrics.excited_population[i] = detail::clamp_unit(rho(1, 1).real());
  };

  Matrix2c rho = rho0.matrix();
  states.push_back(rho0);
  record(0, rho);

  auto h_at = [&](double chi) {
    Matrix2c h;
    const double coupling = params.delta * chi;
    h << complexd(-0.5 * omega_eff, 0.0), complexd(coupling, 0.0),
        complexd(coupling, 0.0), complexd(0.5 * omega_eff, 0.0);
    return h;
  };

  for (std::size_t i = 0; i < n; ++i) {
    const Matrix2c h = h_at(noise.values[i]);
    const Matrix2c k1 = detail::lindblad_rhs(rho, h, inv_t1, gamma_phi);
    const Matrix2c k2 = detail::lindblad_rhs(rho + 0.5 * dt * k1, h, inv_t1, gamma_phi);
    const Matrix2c k3 = detail::lindblad_rhs(rho + 0.5 * dt * k2, h, inv_t1, gamma_phi);
    const Matrix2c k4 = detail::lindblad_rhs(rho + dt * k3, h, inv_t1, gamma_phi);
    rho += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    rho = 0.5 * (rho + rho.adjoint().eval());
    states.emplace_back(DensityMatrix(rho));
    record(i + 1, rho);
  }
  return LindbladResult{std::move(states), std::move(metrics)};
}

/// Pointwise ensemble mean and sample std of each metric.
struct MetricsEnsemble {
  TimeGrid grid;
  std::size_t n_runs = 0;
  std::vector<double> fidelity_mean, fidelity_std;
  std::vector<double> coherence_mean, coherence_std;
  std::vector<double> pe_mean, pe_std;
};

inline MetricsEnsemble ensemble_metrics(std::span<const QubitMetrics> runs) {
  if (runs.empty()) throw ValidationError("ensemble_metrics: no runs");
  const TimeGrid& grid = runs.front().grid;
  for (const QubitMetrics& run : runs)
    if (!(run.grid == grid)) throw ValidationError("ensemble_metrics: mismatched grids");

  const std::size_t npts = grid.steps() + 1;
  const std::size_t n = runs.size();
  MetricsEnsemble out{grid, n, {}, {}, {}, {}, {}, {}};

  auto reduce = [&](auto metric_of, std::vector<double>& mean_out,
                    std::vector<double>& std_out) {
    std::vector<double> mean(npts, 0.0), m2(npts, 0.0);
    std::size_t count = 0;
    for (const QubitMetrics& run : runs) {
      ++count;
      const std::vector<double>& vals = metric_of(run);
      const double inv = 1.0 / static_cast<double>(count);
      for (std::size_t i = 0; i < npts; ++i) {
        const double delta = vals[i] - mean[i];
        mean[i] += delta * inv;
        m2[i] += delta * (vals[i] - mean[i]);
      }
    }
    std::vector<double> sd(npts, 0.0);
    if (n > 1)
      for (std::size_t i = 0; i < npts; ++i)
        sd[i] = std::sqrt(m2[i] / static_cast<double>(n - 1));
    mean_out = std::move(mean);
    std_out = std::move(sd);
  };

  reduce([](const QubitMetrics& m) -> const std::vector<double>& { return m.fidelity; },
         out.fidelity_mean, out.fidelity_std);
  reduce([](const QubitMetrics& m) -> const std::vector<double>& { return m.coherence; },
         out.coherence_mean, out.coherence_std);
  reduce([](const QubitMetrics& m) -> const std::vector<double>& { return m.excited_population; },
         out.pe_mean, out.pe_std);
  return out;
}

}  // namespace qnoise
