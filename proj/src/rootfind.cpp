#include "aniso/rootfind.hpp"

#include <algorithm>

namespace aniso {

std::vector<std::pair<double, double>> scan_sign_changes(const ScalarFn& fn, double lo, double hi,
                                                         int grid_points) {
  std::vector<std::pair<double, double>> brackets;
  const double dx = (hi - lo) / grid_points;
  double a = lo, fa = fn(a);
  for (int i = 1; i <= grid_points; i++) {
    const double b = (i == grid_points) ? hi : lo + i * dx;
    const double fb = fn(b);
    if (fa == 0.0)
      brackets.emplace_back(a, a);
    else if (fa * fb < 0.0)
      brackets.emplace_back(a, b);
    a = b;
    fa = fb;
  }
  if (fa == 0.0) brackets.emplace_back(hi, hi);
  return brackets;
}

double bisect(const ScalarFn& fn, double a, double b) {
  if (a == b) return a;
  double fa = fn(a);
  if (fa == 0.0) return a;
  double fb = fn(b);
  if (fb == 0.0) return b;
  for (int it = 0; it < 200; it++) {
    const double m = 0.5 * (a + b);
    if (b - a <= 1e-15 * std::max(1.0, std::abs(m))) return m;
    const double fm = fn(m);
    if (fm == 0.0) return m;
    if (fa * fm < 0.0) {
      b = m;
      fb = fm;
    } else {
      a = m;
      fa = fm;
    }
  }
  return 0.5 * (a + b);
}

double fd_newton_polish(const ScalarFn& fn, double x0, double lo, double hi) {
  double x = x0, fx = fn(x);
  for (int it = 0; it < 3; it++) {
    const double h = 1e-6 * std::max(1.0, std::abs(x));
    const double slope = (fn(x + h) - fn(x - h)) / (2.0 * h);
    if (slope == 0.0 || !std::isfinite(slope)) break;
    const double xn = x - fx / slope;
    if (!(xn >= lo && xn <= hi)) break;
    const double fxn = fn(xn);
    if (std::abs(fxn) >= std::abs(fx)) break;
    x = xn;
    fx = fxn;
  }
  return x;
}

std::vector<double> find_roots(const ScalarFn& fn, double lo, double hi, int grid_points) {
  std::vector<double> roots;
  for (const auto& [a, b] : scan_sign_changes(fn, lo, hi, grid_points)) {
    double r = bisect(fn, a, b);
    r = fd_newton_polish(fn, r, lo, hi);
    if (roots.empty() || std::abs(r - roots.back()) > 1e-9 * std::max(1.0, std::abs(r)))
      roots.push_back(r);
  }
  return roots;
}

}  // namespace aniso
