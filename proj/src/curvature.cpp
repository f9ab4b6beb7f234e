#include "aniso/curvature.hpp"

#include <cmath>

#include "aniso/metric.hpp"

namespace aniso {

namespace {

// delta T/dx^k and dT/dy^k of a tensor field for all three k
template <class T, class F>
void phase_derivatives(F&& field, const RefractiveProfile& profile, const PhasePoint& p,
                       double step_scale, std::array<T, 3>& ddx, std::array<T, 3>& ddy) {
  for (int k = 0; k < 3; k++) {
    ddx[k] = delta_x(field, profile, p, k, std::cbrt(fd::kEps) * step_scale);
    ddy[k] = fd::partial_y(field, p, k, fd::step3(p.y[k], step_scale));
  }
}

}  // namespace

TorsionSet torsions(const RefractiveProfile& profile, const PhasePoint& p, double step_scale) {
  auto n_field = [&](const PhasePoint& q) { return nonlinear_connection(profile, q).n; };
  std::array<Mat3, 3> dn_dx{}, dn_dy{};
  phase_derivatives<Mat3>(n_field, profile, p, step_scale, dn_dx, dn_dy);

  const CartanCoefficients cc = cartan_closed_form(profile, p);

  TorsionSet out;
  out.C = cc.C;
  for (int i = 0; i < 3; i++)
    for (int j = 0; j < 3; j++)
      for (int k = 0; k < 3; k++) {
        out.R[i][j][k] = dn_dx[k][i][j] - dn_dx[j][i][k];
        out.P[i][j][k] = dn_dy[k][i][j] - cc.L[i][k][j];
      }
  return out;
}

Ten4 h_covariant_C(const RefractiveProfile& profile, const PhasePoint& p, double step_scale) {
  const CartanCoefficients cc = cartan_closed_form(profile, p);
  auto c_field = [&](const PhasePoint& q) { return cartan_closed_form(profile, q).C; };
  std::array<Ten3, 3> dc_dx{};
  for (int k = 0; k < 3; k++)
    dc_dx[k] = delta_x(c_field, profile, p, k, std::cbrt(fd::kEps) * step_scale);

  Ten4 out{};
  for (int i = 0; i < 3; i++)
    for (int j = 0; j < 3; j++)
      for (int l = 0; l < 3; l++)
        for (int k = 0; k < 3; k++) {
          double v = dc_dx[k][i][j][l];
          for (int r = 0; r < 3; r++)
            v += cc.C[r][j][l] * cc.L[i][r][k] - cc.C[i][r][l] * cc.L[r][j][k] -
                 cc.C[i][j][r] * cc.L[r][l][k];
          out[i][j][l][k] = v;
        }
  return out;
}

MetricityResiduals metricity_residuals(const RefractiveProfile& profile, const PhasePoint& p,
                                       double step_scale) {
  auto g_field = [&](const PhasePoint& q) { return fundamental_tensor(profile, q); };
  std::array<Mat3, 3> dg_dx{}, dg_dy{};
  phase_derivatives<Mat3>(g_field, profile, p, step_scale, dg_dx, dg_dy);

  const Mat3 g = fundamental_tensor(profile, p);
  const CartanCoefficients cc = cartan_closed_form(profile, p);

  MetricityResiduals out;
  for (int i = 0; i < 3; i++)
    for (int j = 0; j < 3; j++)
      for (int k = 0; k < 3; k++) {
        double h = dg_dx[k][i][j];
        double v = dg_dy[k][i][j];
        for (int r = 0; r < 3; r++) {
          h -= cc.L[r][i][k] * g[r][j] + cc.L[r][j][k] * g[i][r];
          v -= cc.C[r][i][k] * g[r][j] + cc.C[r][j][k] * g[i][r];
        }
        out.h[i][j][k] = h;
        out.v[i][j][k] = v;
      }
  return out;
}

CurvatureSet curvatures(const RefractiveProfile& profile, const PhasePoint& p,
                        double step_scale) {
  const CartanCoefficients cc = cartan_closed_form(profile, p);
  const TorsionSet tor = torsions(profile, p, step_scale);
  const Ten4 c_bar = h_covariant_C(profile, p, step_scale);

  auto l_field = [&](const PhasePoint& q) { return cartan_closed_form(profile, q).L; };
  auto c_field = [&](const PhasePoint& q) { return cartan_closed_form(profile, q).C; };
  std::array<Ten3, 3> dl_dx{}, dl_dy{}, dc_dy{};
  for (int k = 0; k < 3; k++) {
    dl_dx[k] = delta_x(l_field, profile, p, k, std::cbrt(fd::kEps) * step_scale);
    dl_dy[k] = fd::partial_y(l_field, p, k, fd::step3(p.y[k], step_scale));
    dc_dy[k] = fd::partial_y(c_field, p, k, fd::step3(p.y[k], step_scale));
  }

  CurvatureSet out;
  for (int i = 0; i < 3; i++)
    for (int j = 0; j < 3; j++)
      for (int k = 0; k < 3; k++)
        for (int l = 0; l < 3; l++) {
          double r4 = dl_dx[l][i][j][k] - dl_dx[k][i][j][l];
          double p4 = dl_dy[l][i][j][k] - c_bar[i][j][l][k];
          double s4 = dc_dy[l][i][j][k] - dc_dy[k][i][j][l];
          for (int r = 0; r < 3; r++) {
            r4 += cc.L[r][j][k] * cc.L[i][r][l] - cc.L[r][j][l] * cc.L[i][r][k] +
                  cc.C[i][j][r] * tor.R[r][k][l];
            p4 += cc.C[i][j][r] * tor.P[r][k][l];
            s4 += cc.C[r][j][k] * cc.C[i][r][l] - cc.C[r][j][l] * cc.C[i][r][k];
          }
          out.R4[i][j][k][l] = r4;
          out.P4[i][j][k][l] = p4;
          out.S4[i][j][k][l] = s4;
        }
  return out;
}

}  // namespace aniso
