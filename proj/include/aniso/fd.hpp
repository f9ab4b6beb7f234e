#pragma once
#include <cmath>
#include <limits>

#include "aniso/geom.hpp"

namespace aniso::fd {

inline constexpr double kEps = std::numeric_limits<double>::epsilon();

// optimal central-difference step for a first derivative of an exact function
inline double step3(double coord, double scale = 1.0) {
  return scale * std::cbrt(kEps) * std::max(1.0, std::abs(coord));
}
// relaxed step used where finite differences compose
inline double step4(double coord, double scale = 1.0) {
  return scale * std::pow(kEps, 0.25) * std::max(1.0, std::abs(coord));
}

template <class F>
auto partial_x(F&& field, const PhasePoint& p, int k, double h) -> decltype(field(p)) {
  PhasePoint pp = p, pm = p;
  pp.x[k] += h;
  pm.x[k] -= h;
  return (0.5 / h) * (field(pp) - field(pm));
}

template <class F>
auto partial_y(F&& field, const PhasePoint& p, int k, double h) -> decltype(field(p)) {
  PhasePoint pp = p, pm = p;
  pp.y[k] += h;
  pm.y[k] -= h;
  return (0.5 / h) * (field(pp) - field(pm));
}

}  // namespace aniso::fd
