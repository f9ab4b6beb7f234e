#pragma once
#include <cmath>
#include <functional>
#include <utility>
#include <vector>

namespace aniso {

using ScalarFn = std::function<double(double)>;

// sign-change brackets of fn on a uniform grid over [lo, hi]
std::vector<std::pair<double, double>> scan_sign_changes(const ScalarFn& fn, double lo, double hi,
                                                         int grid_points = 1024);

// bisection to a relative interval width of ~1e-15; requires fn(a)*fn(b) <= 0
double bisect(const ScalarFn& fn, double a, double b);

// a couple of Newton steps with a finite-difference slope; falls back to x0
// when the polish leaves [lo, hi] or does not improve |fn|
double fd_newton_polish(const ScalarFn& fn, double x0, double lo, double hi);

// grid scan + bisection + polish; returns all roots found on [lo, hi]
std::vector<double> find_roots(const ScalarFn& fn, double lo, double hi, int grid_points = 1024);

}  // namespace aniso
