#pragma once

#include <cmath>
#include <optional>

#include "qnoise/errors.hpp"
#include "qnoise/hurst_profile.hpp"

namespace qnoise {

/// Causal weight K(t,s) applied to past noise increments. Two families:
///
///   mmfbm:     K(t,s) = (t-s)^{H(t)-1/2} / Gamma(H(t)+1/2)
///   power_law: K(t,s) = (t-s)^{beta/2-1} / Gamma(beta/2)
///
/// both zero for s >= t, optionally damped by exp(-(t-s)/tau_c). The mmfbm
/// family drives increments of local size dt^{H(s)}; the power-law family is
/// Wiener-driven (dt^{1/2}).
class MemoryKernel {
 public:
  enum class Kind { Mmfbm, PowerLaw };

  static MemoryKernel mmfbm(HurstProfile hurst,
                            std::optional<double> cutoff = std::nullopt) {
    MemoryKernel k;
    k.kind_ = Kind::Mmfbm;
    k.hurst_ = hurst;
    k.set_cutoff(cutoff);
    return k;
  }

  static MemoryKernel power_law(double beta,
                                std::optional<double> cutoff = std::nullopt) {
    if (!(beta > 0.0)) throw std::domain_error("MemoryKernel: beta must be > 0");
    MemoryKernel k;
    k.kind_ = Kind::PowerLaw;
    k.beta_ = beta;
    k.set_cutoff(cutoff);
    return k;
  }

  Kind kind() const { return kind_; }
  const HurstProfile& hurst() const { return hurst_; }
  double beta() const { return beta_; }
  std::optional<double> cutoff() const { return cutoff_; }

  /// Lag-only kernels admit a precomputed row K(lag); time-varying H does not.
  bool is_stationary() const {
    return kind_ == Kind::PowerLaw || hurst_.is_constant();
  }

  /// Exponent of (t-s) in the kernel at observation time t.
  double lag_exponent_at(double t) const {
    return kind_ == Kind::Mmfbm ? hurst_.at(t) - 0.5 : 0.5 * beta_ - 1.0;
  }

  /// Normalization constant 1/Gamma(.) at observation time t.
  double normalization_at(double t) const {
    const double g = kind_ == Kind::Mmfbm ? std::tgamma(hurst_.at(t) + 0.5)
                                          : std::tgamma(0.5 * beta_);
    return 1.0 / g;
  }

  /// Exponent h in the per-increment standard deviation dt^h at source time s.
  double increment_exponent_at(double s) const {
    return kind_ == Kind::Mmfbm ? hurst_.at(s) : 0.5;
  }

  /// K evaluated at a positive lag with the exponent/normalization of time t.
  double eval_lag(double lag, double t) const {
    double v = std::pow(lag, lag_exponent_at(t)) * normalization_at(t);
    if (cutoff_) v *= std::exp(-lag / *cutoff_);
    return v;
  }

  /// K(t,s): zero whenever s >= t (causality).
  double eval(double t, double s) const {
    if (s >= t) return 0.0;
    return eval_lag(t - s, t);
  }

 private:
  MemoryKernel() : hurst_(HurstProfile::constant(0.5)) {}

  void set_cutoff(std::optional<double> cutoff) {
    if (cutoff && !(*cutoff > 0.0))
      throw ValidationError("MemoryKernel: cutoff must be > 0");
    cutoff_ = cutoff;
  }

  Kind kind_ = Kind::Mmfbm;
  HurstProfile hurst_;
  double beta_ = 1.0;
  std::optional<double> cutoff_;
};

inline double kernel_eval(const MemoryKernel& kernel, double t, double s) {
  return kernel.eval(t, s);
}

}  // namespace qnoise
