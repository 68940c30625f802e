#pragma once

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

#include <Eigen/Cholesky>
#include <Eigen/Dense>

#include "qnoise/fft.hpp"
#include "qnoise/noise_path.hpp"
#include "qnoise/rng.hpp"
#include "qnoise/time_grid.hpp"

namespace qnoise {

/// Constant-H fractional Brownian motion sampler with the exact covariance
///   Cov[B(t_i), B(t_j)] = (t_i^{2H} + t_j^{2H} - |t_i - t_j|^{2H}) / 2.
///
/// Small grids (N <= cholesky_limit) factor the covariance matrix once;
/// larger grids use circulant embedding of the increment process
/// (Davies-Harte), which costs one length-m FFT per path, m = 2^k >= 2N.
/// The setup state is immutable after construction, so one generator can be
/// shared across sampling threads.
class FbmGenerator {
 public:
  static constexpr std::size_t cholesky_limit = 2048;

  FbmGenerator(double h, const TimeGrid& grid) : h_(h), grid_(grid) {
    if (!(h > 0.0) || !(h < 1.0))
      throw std::domain_error("FbmGenerator: Hurst exponent must lie in (0,1)");
    if (grid.steps() <= cholesky_limit)
      init_cholesky();
    else
      init_circulant();
  }

  double hurst() const { return h_; }
  const TimeGrid& grid() const { return grid_; }
  bool uses_circulant() const { return fft_ != nullptr; }

  NoisePath sample(std::uint64_t seed) const {
    return uses_circulant() ? sample_circulant(seed) : sample_cholesky(seed);
  }

 private:
  void init_cholesky() {
    const std::size_t n = grid_.steps();
    const double two_h = 2.0 * h_;
    Eigen::MatrixXd cov(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      const double ti = grid_.time_at(i + 1);
      for (std::size_t j = 0; j <= i; ++j) {
        const double tj = grid_.time_at(j + 1);
        const double v = 0.5 * (std::pow(ti, two_h) + std::pow(tj, two_h) -
                                std::pow(ti - tj, two_h));
        cov(i, j) = v;
        cov(j, i) = v;
      }
    }
    Eigen::LLT<Eigen::MatrixXd> llt(cov);
    if (llt.info() != Eigen::Success) {
      // Rounding can push the smallest eigenvalue just below zero; retry with
      // a ridge at rounding scale.
      cov.diagonal().array() += 1e-12 * cov.diagonal().maxCoeff();
      llt.compute(cov);
      if (llt.info() != Eigen::Success)
        throw std::runtime_error("FbmGenerator: covariance factorization failed");
    }
    chol_ = llt.matrixL();
  }

  NoisePath sample_cholesky(std::uint64_t seed) const {
    const std::size_t n = grid_.steps();
    const std::vector<double> z = standard_normals(n, seed);
    Eigen::Map<const Eigen::VectorXd> zv(z.data(), static_cast<Eigen::Index>(n));
    Eigen::VectorXd x = chol_.triangularView<Eigen::Lower>() * zv;
    std::vector<double> values(n + 1);
    values[0] = 0.0;
    for (std::size_t i = 0; i < n; ++i) values[i + 1] = x(static_cast<Eigen::Index>(i));
    return NoisePath(grid_, std::move(values));
  }

  // Circulant embedding of fractional Gaussian noise: eigenvalues of the
  // wrapped autocovariance row are computed once; tiny negative eigenvalues
  // from rounding are clamped to zero.
  void init_circulant() {
    const std::size_t n = grid_.steps();
    const double dt = grid_.dt();
    const double two_h = 2.0 * h_;
    m_ = std::bit_ceil(2 * n);
    const double var_scale = std::pow(dt, two_h);
    auto gamma = [&](std::size_t k) {
      const double kd = static_cast<double>(k);
      return 0.5 * var_scale *
             (std::pow(kd + 1.0, two_h) - 2.0 * std::pow(kd, two_h) +
              (k == 0 ? 1.0 : std::pow(kd - 1.0, two_h)));
    };
    std::vector<std::complex<double>> row(m_);
    for (std::size_t j = 0; j < m_; ++j) row[j] = gamma(std::min(j, m_ - j));
    fft_ = std::make_unique<Fft>(m_);
    std::vector<std::complex<double>> lambda = fft_->forward(row);
    sqrt_lambda_.resize(m_);
    for (std::size_t k = 0; k < m_; ++k)
      sqrt_lambda_[k] = std::sqrt(std::max(lambda[k].real(), 0.0));
  }

  NoisePath sample_circulant(std::uint64_t seed) const {
    const std::size_t n = grid_.steps();
    const std::size_t half = m_ / 2;
    const std::vector<double> g = standard_normals(m_, seed);
    const double inv_sqrt_m = 1.0 / std::sqrt(static_cast<double>(m_));
    const double pair_scale = inv_sqrt_m / std::sqrt(2.0);
    std::vector<std::complex<double>> coeff(m_);
    coeff[0] = sqrt_lambda_[0] * inv_sqrt_m * g[0];
    coeff[half] = sqrt_lambda_[half] * inv_sqrt_m * g[1];
    for (std::size_t k = 1; k < half; ++k) {
      const double a = g[2 * k];
      const double b = g[2 * k + 1];
      const std::complex<double> c(a * pair_scale, b * pair_scale);
      coeff[k] = sqrt_lambda_[k] * c;
      coeff[m_ - k] = std::conj(coeff[k]);
    }
    std::vector<std::complex<double>> x(m_);
    fft_->forward(coeff.data(), x.data());
    std::vector<double> values(n + 1);
    values[0] = 0.0;
    for (std::size_t i = 0; i < n; ++i) values[i + 1] = values[i] + x[i].real();
    return NoisePath(grid_, std::move(values));
  }

  double h_;
  TimeGrid grid_;
  Eigen::MatrixXd chol_;
  std::size_t m_ = 0;
  std::unique_ptr<Fft> fft_;
  std::vector<double> sqrt_lambda_;
};

/// One-shot fBm path; reuse an FbmGenerator when sampling many paths.
inline NoisePath generate_fbm(double h, const TimeGrid& grid, std::uint64_t seed) {
  return FbmGenerator(h, grid).sample(seed);
}

}  // namespace qnoise
