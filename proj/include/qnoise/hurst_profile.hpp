#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qnoise/errors.hpp"

namespace qnoise {

/// Local regularity index of the noise driver, either a constant h0 or the
/// sinusoidal law H(t) = h0 + a*sin(2*pi*t/P). Construction rejects profiles
/// whose extrema h0 +/- |a| leave (0,1).
class HurstProfile {
 public:
  enum class Kind { Constant, Sinusoidal };

  static HurstProfile constant(double h0) {
    check_range(h0, h0);
    HurstProfile p;
    p.kind_ = Kind::Constant;
    p.h0_ = h0;
    return p;
  }

  static HurstProfile sinusoidal(double h0, double amplitude, double period) {
    if (!(period > 0.0)) throw ValidationError("HurstProfile: period must be > 0");
    check_range(h0 - std::abs(amplitude), h0 + std::abs(amplitude));
    HurstProfile p;
    p.kind_ = Kind::Sinusoidal;
    p.h0_ = h0;
    p.amplitude_ = amplitude;
    p.period_ = period;
    return p;
  }

  Kind kind() const { return kind_; }
  double base() const { return h0_; }
  double amplitude() const { return amplitude_; }
  double period() const { return period_; }
  bool is_constant() const { return kind_ == Kind::Constant; }

  /// H(t); t < 0 is outside the domain of every generated process.
  double at(double t) const {
    if (!(t >= 0.0)) throw std::domain_error("HurstProfile: t must be >= 0");
    if (kind_ == Kind::Constant) return h0_;
    return h0_ + amplitude_ * std::sin(2.0 * std::numbers::pi * t / period_);
  }

 private:
  HurstProfile() = default;

  static void check_range(double lo, double hi) {
    if (!(lo > 0.0) || !(hi < 1.0))
      throw ValidationError("HurstProfile: H(t) must stay within (0,1)");
  }

  Kind kind_ = Kind::Constant;
  double h0_ = 0.5;
  double amplitude_ = 0.0;
  double period_ = 1.0;
};

/// H(t) lookup, validating the domain.
inline double hurst_at(const HurstProfile& profile, double t) { return profile.at(t); }

}  // namespace qnoise
