#pragma once

#include <cstddef>
#include <vector>

#include "qnoise/errors.hpp"

namespace qnoise {

/// Uniform time discretization shared by every simulation: N steps of size
/// dt = total_time / steps, with N+1 sample points t_i.
class TimeGrid {
 public:
  TimeGrid(double total_time, std::size_t steps)
      : total_time_(total_time), steps_(steps) {
    if (!(total_time > 0.0)) throw ValidationError("TimeGrid: total_time must be > 0");
    if (steps == 0) throw ValidationError("TimeGrid: steps must be >= 1");
    dt_ = total_time / static_cast<double>(steps);
    times_.resize(steps + 1);
    // t_i = T * (i/N) so that t_0 == 0 and t_N == T exactly.
    for (std::size_t i = 0; i <= steps; ++i)
      times_[i] = total_time * (static_cast<double>(i) / static_cast<double>(steps));
  }

  double total_time() const { return total_time_; }
  std::size_t steps() const { return steps_; }
  double dt() const { return dt_; }
  const std::vector<double>& times() const { return times_; }
  double time_at(std::size_t i) const { return times_[i]; }

  bool operator==(const TimeGrid& other) const {
    return total_time_ == other.total_time_ && steps_ == other.steps_;
  }

 private:
  double total_time_;
  std::size_t steps_;
  double dt_;
  std::vector<double> times_;
};

}  // namespace qnoise
