#pragma once

#include <cstddef>

namespace liefrenet {

/// Uniform arc-length grid on [s0, s1]. The requested step is snapped to
/// the nearest step count that divides the interval exactly, so the last
/// node lands on s1.
class ArcGrid {
 public:
  /// Throws std::invalid_argument unless s1 > s0 and 0 < step <= s1 - s0.
  ArcGrid(double s0, double s1, double step);

  double s0() const { return s0_; }
  double s1() const { return s1_; }
  double step() const { return step_; }
  std::size_t step_count() const { return steps_; }
  std::size_t node_count() const { return steps_ + 1; }

  /// node(0) == s0 and node(step_count()) == s1 exactly.
  double node(std::size_t i) const;

 private:
  double s0_, s1_, step_;
  std::size_t steps_;
};

}  // namespace liefrenet
