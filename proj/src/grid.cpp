#include "liefrenet/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace liefrenet {

ArcGrid::ArcGrid(double s0, double s1, double step) : s0_(s0), s1_(s1) {
  if (!std::isfinite(s0) || !std::isfinite(s1) || !std::isfinite(step))
    throw std::invalid_argument("arc grid: non-finite bound or step");
  if (!(s1 > s0)) throw std::invalid_argument("arc grid: requires s1 > s0");
  if (!(step > 0.0) || step > (s1 - s0))
    throw std::invalid_argument("arc grid: requires 0 < step <= s1 - s0");
  const long long n = std::llround((s1 - s0) / step);
  steps_ = static_cast<std::size_t>(n < 1 ? 1 : n);
  step_ = (s1 - s0) / static_cast<double>(steps_);
}

double ArcGrid::node(std::size_t i) const {
  if (i >= steps_) return s1_;
  return s0_ + static_cast<double>(i) * step_;
}

}  // namespace liefrenet
