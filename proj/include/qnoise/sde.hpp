#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>

#include "qnoise/memory_kernel.hpp"
#include "qnoise/mmfbm.hpp"
#include "qnoise/noise_path.hpp"
#include "qnoise/time_grid.hpp"

namespace qnoise {

/// Drift F(chi): either the relaxation form -lambda*chi (lambda >= 0) or the
/// signed-coefficient form mu*chi.
class DriftSpec {
 public:
  enum class Kind { Relaxation, Coefficient };

  static DriftSpec relaxation(double lambda) {
    if (!(lambda >= 0.0)) throw ValidationError("DriftSpec: lambda must be >= 0");
    return DriftSpec(Kind::Relaxation, lambda);
  }

  static DriftSpec coefficient(double mu) { return DriftSpec(Kind::Coefficient, mu); }

  Kind kind() const { return kind_; }
  double value() const { return value_; }

  double eval(double chi) const {
    return kind_ == Kind::Relaxation ? -value_ * chi : value_ * chi;
  }

 private:
  DriftSpec(Kind kind, double value) : kind_(kind), value_(value) {}
  Kind kind_;
  double value_;
};

/// Everything needed to integrate one chi(t) trajectory.
struct SdeSpec {
  DriftSpec drift;
  double diffusion_amplitude;  // sigma for the mmfBm SDE, sigma_phi for the memory OU
  double chi0;
  MemoryKernel kernel;
  TimeGrid grid;

  SdeSpec(DriftSpec d, double amplitude, double chi0_, MemoryKernel k, TimeGrid g)
      : drift(d), diffusion_amplitude(amplitude), chi0(chi0_),
        kernel(std::move(k)), grid(std::move(g)) {
    if (!(diffusion_amplitude >= 0.0))
      throw ValidationError("SdeSpec: diffusion amplitude must be >= 0");
  }
};

namespace detail {
/// Euler recursion chi_{i+1} = chi_i + F(chi_i)*dt + amplitude * (D_{i+1} - D_i)
/// against an already-generated driver path D.
inline NoisePath euler_with_driver(const SdeSpec& spec, const NoisePath& driver,
                                   double amplitude) {
  const std::size_t n = spec.grid.steps();
  const double dt = spec.grid.dt();
  std::vector<double> chi(n + 1);
  chi[0] = spec.chi0;
  for (std::size_t i = 0; i < n; ++i) {
    const double increment = driver.values[i + 1] - driver.values[i];
    chi[i + 1] = chi[i] + spec.drift.eval(chi[i]) * dt + amplitude * increment;
  }
  return NoisePath(spec.grid, std::move(chi));
}
}  // namespace detail

/// Euler-Maruyama integration of d(chi) = F dt + G dM against an mmfBm driver.
inline NoisePath integrate_mmfbm_sde(const SdeSpec& spec, std::uint64_t seed) {
  if (spec.kernel.kind() != MemoryKernel::Kind::Mmfbm)
    throw ValidationError("integrate_mmfbm_sde: spec must use an mmfbm kernel");
  const NoisePath driver = generate_mmfbm(spec.kernel, spec.grid, seed);
  return detail::euler_with_driver(spec, driver, spec.diffusion_amplitude);
}

/// Memory Ornstein-Uhlenbeck reduction: relaxation drift plus the Wiener-fed
/// power-law memory integral I(t) = sum_{j<i} K(t_i,t_j) dW_j, entering with
/// the sigma_phi/(2*pi) prefactor.
inline NoisePath integrate_memory_ou(const SdeSpec& spec, std::uint64_t seed) {
  if (spec.kernel.kind() != MemoryKernel::Kind::PowerLaw)
    throw ValidationError("integrate_memory_ou: spec must use a power_law kernel");
  const NoisePath memory_integral = generate_mmfbm(spec.kernel, spec.grid, seed);
  const double amplitude = spec.diffusion_amplitude / (2.0 * std::numbers::pi);
  return detail::euler_with_driver(spec, memory_integral, amplitude);
}

enum class SdeIntegrator { MmfbmSde, MemoryOu };

inline NoisePath integrate_sde(const SdeSpec& spec, SdeIntegrator integrator,
                               std::uint64_t seed) {
  return integrator == SdeIntegrator::MmfbmSde ? integrate_mmfbm_sde(spec, seed)
                                               : integrate_memory_ou(spec, seed);
}

}  // namespace qnoise
