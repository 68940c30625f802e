#pragma once

#include <complex>
#include <cstddef>
#include <mutex>
#include <vector>

#include <fftw3.h>

#include "qnoise/errors.hpp"

namespace qnoise {

namespace detail {
inline std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace detail

/// Forward complex DFT of fixed size n (sign convention e^{-2*pi*i*jk/n}).
/// Plan creation is serialized; execution on caller buffers is thread-safe.
class Fft {
 public:
  explicit Fft(std::size_t n) : n_(n) {
    if (n == 0) throw ValidationError("Fft: size must be >= 1");
    std::vector<std::complex<double>> dummy_in(n), dummy_out(n);
    std::lock_guard<std::mutex> lock(detail::fftw_planner_mutex());
    plan_ = fftw_plan_dft_1d(static_cast<int>(n),
                             reinterpret_cast<fftw_complex*>(dummy_in.data()),
                             reinterpret_cast<fftw_complex*>(dummy_out.data()),
                             FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!plan_) throw std::runtime_error("Fft: could not create FFTW plan");
  }

  ~Fft() {
    std::lock_guard<std::mutex> lock(detail::fftw_planner_mutex());
    fftw_destroy_plan(plan_);
  }

  Fft(const Fft&) = delete;
  Fft& operator=(const Fft&) = delete;

  std::size_t size() const { return n_; }

  void forward(const std::complex<double>* in, std::complex<double>* out) const {
    fftw_execute_dft(plan_,
                     reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in)),
                     reinterpret_cast<fftw_complex*>(out));
  }

  std::vector<std::complex<double>> forward(const std::vector<std::complex<double>>& in) const {
    if (in.size() != n_) throw ValidationError("Fft: input size mismatch");
    std::vector<std::complex<double>> out(n_);
    forward(in.data(), out.data());
    return out;
  }

 private:
  std::size_t n_;
  fftw_plan plan_;
};

}  // namespace qnoise
