#include "aniso/metric.hpp"

#include <cmath>

#include "aniso/connection.hpp"
#include "aniso/fd.hpp"

namespace aniso {

std::pair<double, double> sigma_tau(const RefractiveProfile& profile, const PhasePoint& p) {
  const double g = profile.gamma(p.x);
  const double g2y2 = g * g * norm2(p.y);
  return {0.5 + g2y2, 0.5 + 3.0 * g2y2};
}

double lagrangian(const RefractiveProfile& profile, const PhasePoint& p) {
  const double g = profile.gamma(p.x);
  const double y2 = norm2(p.y);
  return 0.5 * y2 + 0.5 * g * g * y2 * y2;
}

Mat3 fundamental_tensor(const RefractiveProfile& profile, const PhasePoint& p) {
  const double g = profile.gamma(p.x);
  const double sigma = 0.5 + g * g * norm2(p.y);
  Mat3 out{};
  for (int i = 0; i < 3; i++) {
    for (int j = 0; j < 3; j++) out[i][j] = 2.0 * g * g * p.y[i] * p.y[j];
    out[i][i] += sigma;
  }
  return out;
}

Mat3 inverse_fundamental_tensor(const RefractiveProfile& profile, const PhasePoint& p) {
  const auto [sigma, tau] = sigma_tau(profile, p);
  const double g = profile.gamma(p.x);
  const double c = 2.0 * g * g / (sigma * tau);
  Mat3 out{};
  for (int i = 0; i < 3; i++) {
    for (int j = 0; j < 3; j++) out[i][j] = -c * p.y[i] * p.y[j];
    out[i][i] += 1.0 / sigma;
  }
  return out;
}

double energy(const RefractiveProfile& profile, const PhasePoint& p) {
  const double g = profile.gamma(p.x);
  const double y2 = norm2(p.y);
  return 0.5 * y2 + 1.5 * g * g * y2 * y2;
}

Mat3 hessian_oracle(const RefractiveProfile& profile, const PhasePoint& p) {
  auto L = [&](const PhasePoint& q) { return lagrangian(profile, q); };
  // second-difference step balancing truncation (~gamma^2 h^2) against
  // roundoff (~eps L / h^2); L grows like |y|^4 so the step scales with |y|
  const double h = std::max(std::cbrt(fd::kEps), std::pow(fd::kEps, 0.25) * max_abs(p.y));
  Mat3 out{};
  for (int i = 0; i < 3; i++) {
    for (int j = i; j < 3; j++) {
      double v;
      if (i == j) {
        PhasePoint pp = p, pm = p;
        pp.y[i] += h;
        pm.y[i] -= h;
        v = (L(pp) - 2.0 * L(p) + L(pm)) / (h * h);
      } else {
        PhasePoint a = p, b = p, c = p, d = p;
        a.y[i] += h; a.y[j] += h;
        b.y[i] += h; b.y[j] -= h;
        c.y[i] -= h; c.y[j] += h;
        d.y[i] -= h; d.y[j] -= h;
        v = (L(a) - L(b) - L(c) + L(d)) / (4.0 * h * h);
      }
      out[i][j] = out[j][i] = 0.5 * v;
    }
  }
  return out;
}

GeometryBundle geometry_bundle(const RefractiveProfile& profile, const PhasePoint& p) {
  GeometryBundle b;
  std::tie(b.sigma, b.tau) = sigma_tau(profile, p);
  b.g = fundamental_tensor(profile, p);
  b.g_inv = inverse_fundamental_tensor(profile, p);
  b.G = semispray(profile, p);
  b.N = nonlinear_connection(profile, p).n;
  return b;
}

}  // namespace aniso
