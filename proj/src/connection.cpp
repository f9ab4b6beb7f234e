#include "aniso/connection.hpp"

#include <cmath>

#include "aniso/metric.hpp"

namespace aniso {

namespace {

struct PointData {
  double gam;     // gamma(x)
  Vec3 gs;        // gamma_s = d gamma/dx^s  (gamma^i = delta^{ir} gamma_r = gamma_i)
  double gsy;     // gamma_s y^s
  double y2;      // ||y||^2
  double sigma, tau;
};

PointData point_data(const RefractiveProfile& profile, const PhasePoint& p) {
  PointData d;
  d.gam = profile.gamma(p.x);
  d.gs = profile.gamma_gradient(p.x);
  d.gsy = dot(d.gs, p.y);
  d.y2 = norm2(p.y);
  d.sigma = 0.5 + d.gam * d.gam * d.y2;
  d.tau = 0.5 + 3.0 * d.gam * d.gam * d.y2;
  return d;
}

}  // namespace

Vec3 semispray(const RefractiveProfile& profile, const PhasePoint& p) {
  const PointData d = point_data(profile, p);
  const double y4 = d.y2 * d.y2;
  const double c1 = d.gam / d.sigma * d.y2 * d.gsy;
  const double c2 = d.gam / (4.0 * d.sigma) * y4;
  const double c3 = 3.0 * d.gam * d.gam * d.gam / (2.0 * d.sigma * d.tau) * y4 * d.gsy;
  Vec3 out{};
  for (int i = 0; i < 3; i++) out[i] = c1 * p.y[i] - c2 * d.gs[i] - c3 * p.y[i];
  return out;
}

NonlinearConnection nonlinear_connection(const RefractiveProfile& profile, const PhasePoint& p) {
  const PointData d = point_data(profile, p);
  const auto& y = p.y;
  const double g = d.gam, sig = d.sigma, tau = d.tau, y2 = d.y2, gsy = d.gsy;
  const double g2 = g * g, g3 = g2 * g;

  NonlinearConnection nc;
  for (int i = 0; i < 3; i++) {
    for (int j = 0; j < 3; j++) {
      const double dij = (i == j) ? 1.0 : 0.0;
      const double t1 = 2.0 * g / sig * y[i] * y[j] * gsy;
      const double t2 = g * y2 / sig *
                        (dij * gsy + y[i] * d.gs[j] - d.gs[i] * y[j] -
                         2.0 * g2 / sig * y[i] * y[j] * gsy - 6.0 * g2 / tau * y[i] * y[j] * gsy);
      const double t3 = g3 * y2 * y2 / (2.0 * sig) *
                        (d.gs[i] * y[j] / sig - 3.0 / tau * y[i] * d.gs[j] - 3.0 / tau * dij * gsy +
                         6.0 * g2 / (sig * tau * tau) * (tau + 3.0 * sig) * y[i] * y[j] * gsy);
      nc.n[i][j] = t1 + t2 + t3;
    }
  }
  for (int i = 0; i < 3; i++) {
    double a = 0.0, b = 0.0;
    for (int r = 0; r < 3; r++) {
      a += nc.lower(i, r) * y[r];
      b += nc.lower(r, i) * y[r];
    }
    nc.n_i0[i] = a;
    nc.n_0j[i] = b;
  }
  nc.n_00 = dot(nc.n_i0, y);
  return nc;
}

Mat3 nonlinear_connection_fd(const RefractiveProfile& profile, const PhasePoint& p,
                             double step_scale) {
  Mat3 out{};
  for (int j = 0; j < 3; j++) {
    const double h = fd::step3(p.y[j], step_scale);
    const Vec3 col =
        fd::partial_y([&](const PhasePoint& q) { return semispray(profile, q); }, p, j, h);
    for (int i = 0; i < 3; i++) out[i][j] = col[i];
  }
  return out;
}

CartanCoefficients cartan_closed_form(const RefractiveProfile& profile, const PhasePoint& p) {
  const PointData d = point_data(profile, p);
  const NonlinearConnection nc = nonlinear_connection(profile, p);
  const auto& y = p.y;
  const double g = d.gam, sig = d.sigma, tau = d.tau, y2 = d.y2, gsy = d.gsy;
  const double g2 = g * g;

  CartanCoefficients out;
  for (int i = 0; i < 3; i++) {
    for (int j = 0; j < 3; j++) {
      for (int k = 0; k < 3; k++) {
        const double dij = (i == j) ? 1.0 : 0.0;
        const double dik = (i == k) ? 1.0 : 0.0;
        const double djk = (j == k) ? 1.0 : 0.0;

        // first bracket, prefactor -gamma/sigma
        const double a1 = g * (dij * nc.n_i0[k] + dik * nc.n_i0[j] - djk * nc.n_i0[i]);
        const double a2 = y2 * (djk * d.gs[i] - dij * d.gs[k] - dik * d.gs[j]);
        const double a3 = g * ((nc.lower(j, k) + nc.lower(k, j)) * y[i] +
                               (nc.n[i][k] - nc.lower(i, k)) * y[j] +
                               (nc.n[i][j] - nc.lower(i, j)) * y[k]);
        const double a4 =
            2.0 * (d.gs[i] * y[j] * y[k] - y[i] * y[j] * d.gs[k] - y[i] * y[k] * d.gs[j]);

        // second bracket, prefactor 2 gamma^3 y^i/(sigma tau)
        const double b1 = g * (y[j] * nc.n_i0[k] + y[k] * nc.n_i0[j] - djk * nc.n_00);
        const double b2 = y2 * (djk * gsy - y[j] * d.gs[k] - y[k] * d.gs[j]);
        const double b3 =
            2.0 * (y[j] * y[k] * gsy - y[j] * d.gs[k] * y2 - y[k] * d.gs[j] * y2);
        const double b4 = g * ((nc.lower(j, k) + nc.lower(k, j)) * y2 +
                               (nc.n_i0[k] - nc.n_0j[k]) * y[j] +
                               (nc.n_i0[j] - nc.n_0j[j]) * y[k]);

        out.L[i][j][k] = -g / sig * (a1 + a2 + a3 + a4) +
                         2.0 * g2 * g * y[i] / (sig * tau) * (b1 + b2 + b3 + b4);

        out.C[i][j][k] = g2 / sig * (dij * y[k] + dik * y[j] + djk * y[i]) -
                         2.0 * g2 * g2 / (sig * tau) * (y2 * djk + 2.0 * y[j] * y[k]) * y[i];
      }
    }
  }
  return out;
}

CartanCoefficients cartan_general(const RefractiveProfile& profile, const PhasePoint& p,
                                  double step_scale) {
  auto g_field = [&](const PhasePoint& q) { return fundamental_tensor(profile, q); };
  const Mat3 g_inv = inverse_fundamental_tensor(profile, p);

  // delta g/dx^k with the relaxed quartic step; dg/dy^k with the cubic step
  Ten3 dg_dx{}, dg_dy{};
  for (int k = 0; k < 3; k++) {
    dg_dx[k] = delta_x(g_field, profile, p, k, std::pow(fd::kEps, 0.25) * step_scale);
    dg_dy[k] = fd::partial_y(g_field, p, k, fd::step3(p.y[k], step_scale));
  }

  CartanCoefficients out;
  for (int i = 0; i < 3; i++) {
    for (int j = 0; j < 3; j++) {
      for (int k = 0; k < 3; k++) {
        double l = 0.0, c = 0.0;
        for (int r = 0; r < 3; r++) {
          l += 0.5 * g_inv[i][r] * (dg_dx[k][j][r] + dg_dx[j][k][r] - dg_dx[r][j][k]);
          c += 0.5 * g_inv[i][r] * dg_dy[k][j][r];
        }
        out.L[i][j][k] = l;
        out.C[i][j][k] = c;
      }
    }
  }
  return out;
}

}  // namespace aniso
