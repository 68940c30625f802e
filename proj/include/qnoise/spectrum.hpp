#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <span>
#include <vector>

#include "qnoise/errors.hpp"
#include "qnoise/fft.hpp"
#include "qnoise/noise_path.hpp"
#include "qnoise/stats.hpp"

namespace qnoise {

enum class PsdMethod { Periodogram, SegmentAveraged };

inline const char* psd_method_name(PsdMethod m) {
  return m == PsdMethod::Periodogram ? "periodogram" : "segment-averaged";
}

struct SpectralFit {
  double beta_hat = 0.0;
  double stderr = 0.0;
  double f_lo = 0.0;
  double f_hi = 0.0;
};

/// One-sided PSD over positive frequencies (DC excluded; the input is
/// demeaned before transforming, so the DC bin carries nothing).
struct SpectrumEstimate {
  std::vector<double> frequencies;
  std::vector<double> psd;
  PsdMethod method = PsdMethod::Periodogram;
  std::optional<SpectralFit> fit;
};

namespace detail {

/// One-sided periodogram of a demeaned block, normalized so that
/// sum(psd) * df equals the block's mean square. window_power is
/// (1/L) sum w^2 for the applied taper (1 when none).
inline void accumulate_block_psd(std::span<const double> block, double dt,
                                 std::span<const double> window, double window_power,
                                 const Fft& fft, std::vector<double>& psd_accum) {
  const std::size_t n = block.size();
  std::vector<std::complex<double>> in(n);
  for (std::size_t j = 0; j < n; ++j)
    in[j] = window.empty() ? block[j] : block[j] * window[j];
  std::vector<std::complex<double>> out(n);
  fft.forward(in.data(), out.data());
  const double scale = dt / (static_cast<double>(n) * window_power);
  const std::size_t half = n / 2;
  for (std::size_t k = 1; k <= half; ++k) {
    double s = std::norm(out[k]) * scale;
    const bool nyquist = (n % 2 == 0) && (k == half);
    psd_accum[k - 1] += nyquist ? s : 2.0 * s;
  }
}

}  // namespace detail

/// Default segment length for the segment-averaged estimator: n/8 rounded
/// down to a power of two, clamped to [16, 4096].
inline std::size_t default_segment_length(std::size_t n) {
  const std::size_t target = std::clamp<std::size_t>(n / 8, 16, 4096);
  return std::bit_floor(target);
}

/// PSD of a uniformly sampled series with spacing dt. The periodogram keeps
/// Parseval exact (integrated PSD = population variance); the
/// segment-averaged variant uses 50%-overlapping, per-segment-demeaned
/// blocks under a periodic Hann taper w_j = (1 - cos(2*pi*j/L)) / 2.
inline SpectrumEstimate estimate_psd_series(std::span<const double> series, double dt,
                                            PsdMethod method,
                                            std::optional<std::size_t> segment_length =
                                                std::nullopt) {
  const std::size_t n = series.size();
  if (n < 16) throw ValidationError("estimate_psd: need at least 16 samples");
  if (!(dt > 0.0)) throw ValidationError("estimate_psd: dt must be > 0");

  const double m = mean(series);
  std::vector<double> x(series.begin(), series.end());
  for (double& v : x) v -= m;

  SpectrumEstimate out;
  out.method = method;

  if (method == PsdMethod::Periodogram) {
    const Fft fft(n);
    out.psd.assign(n / 2, 0.0);
    detail::accumulate_block_psd(x, dt, {}, 1.0, fft, out.psd);
    const double df = 1.0 / (static_cast<double>(n) * dt);
    out.frequencies.resize(n / 2);
    for (std::size_t k = 1; k <= n / 2; ++k)
      out.frequencies[k - 1] = static_cast<double>(k) * df;
    return out;
  }

  const std::size_t seg = segment_length.value_or(default_segment_length(n));
  if (seg < 16 || seg > n)
    throw ValidationError("estimate_psd: segment length must lie in [16, n]");
  std::vector<double> window(seg);
  double wp = 0.0;
  for (std::size_t j = 0; j < seg; ++j) {
    window[j] = 0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * static_cast<double>(j) /
                                      static_cast<double>(seg)));
    wp += window[j] * window[j];
  }
  wp /= static_cast<double>(seg);

  const Fft fft(seg);
  out.psd.assign(seg / 2, 0.0);
  const std::size_t hop = std::max<std::size_t>(seg / 2, 1);
  std::size_t n_segments = 0;
  std::vector<double> block(seg);
  for (std::size_t start = 0; start + seg <= n; start += hop) {
    std::copy_n(x.begin() + static_cast<std::ptrdiff_t>(start), seg, block.begin());
    const double bm = mean(block);
    for (double& v : block) v -= bm;
    detail::accumulate_block_psd(block, dt, window, wp, fft, out.psd);
    ++n_segments;
  }
  for (double& v : out.psd) v /= static_cast<double>(n_segments);
  const double df = 1.0 / (static_cast<double>(seg) * dt);
  out.frequencies.resize(seg / 2);
  for (std::size_t k = 0; k < seg / 2; ++k)
    out.frequencies[k] = static_cast<double>(k + 1) * df;
  return out;
}

inline SpectrumEstimate estimate_psd(const NoisePath& path, PsdMethod method,
                                     std::optional<std::size_t> segment_length =
                                         std::nullopt) {
  return estimate_psd_series(path.values, path.grid.dt(), method, segment_length);
}

/// Least-squares slope of log psd against log f on [f_lo, f_hi];
/// beta_hat = -slope. Needs >= 10 strictly positive bins in the band.
inline SpectralFit fit_spectral_exponent(const SpectrumEstimate& spectrum, double f_lo,
                                         double f_hi) {
  if (!(f_lo > 0.0) || !(f_hi > f_lo))
    throw ValidationError("fit_spectral_exponent: need 0 < f_lo < f_hi");
  std::vector<double> log_f, log_p;
  for (std::size_t i = 0; i < spectrum.frequencies.size(); ++i) {
    const double f = spectrum.frequencies[i];
    if (f < f_lo || f > f_hi) continue;
    if (!(spectrum.psd[i] > 0.0))
      throw ValidationError("fit_spectral_exponent: nonpositive psd in fit band");
    log_f.push_back(std::log(f));
    log_p.push_back(std::log(spectrum.psd[i]));
  }
  if (log_f.size() < 10)
    throw ValidationError("fit_spectral_exponent: need >= 10 bins in fit band");
  const LinearFit fit = linear_fit(log_f, log_p);
  return SpectralFit{-fit.slope, fit.slope_stderr, f_lo, f_hi};
}

/// Default fit band: drop the lowest decade (taper/window bias) and the
/// highest octave (aliasing).
inline std::pair<double, double> default_fit_band(const SpectrumEstimate& spectrum) {
  if (spectrum.frequencies.empty())
    throw ValidationError("default_fit_band: empty spectrum");
  return {10.0 * spectrum.frequencies.front(), 0.5 * spectrum.frequencies.back()};
}

}  // namespace qnoise
