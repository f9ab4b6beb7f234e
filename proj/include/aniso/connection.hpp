#pragma once
#include "aniso/fd.hpp"
#include "aniso/geom.hpp"
#include "aniso/media.hpp"

namespace aniso {

// G^i = (gamma/sigma)||y||^2 y^i (gamma_s y^s) - (gamma/(4 sigma))||y||^4 gamma^i
//       - (3 gamma^3/(2 sigma tau))||y||^4 y^i (gamma_s y^s)
Vec3 semispray(const RefractiveProfile& profile, const PhasePoint& p);

/// Canonical nonlinear connection N^i_j = dG^i/dy^j together with the lowered
/// contractions used by the Cartan coefficients. Index convention throughout:
/// n[i][j] = N^i_j (upper index = row); the lowered form is
/// N_ij := N_i^r delta_rj, i.e. lower(i,j) = n[j][i].
struct NonlinearConnection {
  Mat3 n{};
  Vec3 n_i0{};     // N_i0 = N_ir y^r
  Vec3 n_0j{};     // N_0j = N_rj y^r
  double n_00{};   // N_00 = N_ij y^i y^j

  double lower(int i, int j) const { return n[j][i]; }
};

// closed form evaluated literally
NonlinearConnection nonlinear_connection(const RefractiveProfile& profile, const PhasePoint& p);

// central finite differences of the semispray in y; oracle for the closed form
Mat3 nonlinear_connection_fd(const RefractiveProfile& profile, const PhasePoint& p,
                             double step_scale = 1.0);

/// Adapted derivative delta/dx^k = d/dx^k - N^r_k d/dy^r applied to a
/// tensor-valued field of the phase point (finite differences, N from the
/// closed form at p). rel_step is the relative FD step; fd::step3 scaling by
/// default.
template <class F>
auto delta_x(F&& field, const RefractiveProfile& profile, const PhasePoint& p, int k,
             double rel_step = std::cbrt(fd::kEps)) -> decltype(field(p)) {
  const Mat3 n = nonlinear_connection(profile, p).n;
  const double hx = rel_step * std::max(1.0, std::abs(p.x[k]));
  auto out = fd::partial_x(field, p, k, hx);
  for (int r = 0; r < 3; r++) {
    const double hy = rel_step * std::max(1.0, std::abs(p.y[r]));
    out = out - n[r][k] * fd::partial_y(field, p, r, hy);
  }
  return out;
}

// Cartan canonical connection coefficients, stored as [i][j][k] with i the
// upper index; L horizontal, C vertical. Both symmetric in (j,k).
struct CartanCoefficients {
  Ten3 L{};
  Ten3 C{};
};

// adapted local components (closed form)
CartanCoefficients cartan_closed_form(const RefractiveProfile& profile, const PhasePoint& p);

// general formulas L^i_jk = (g^{ir}/2)(dg_jr/dx^k + dg_kr/dx^j - dg_jk/dx^r)
// in adapted derivatives and C^i_jk = (g^{ir}/2) dg_jr/dy^k; independent code
// path, oracle for the closed form
CartanCoefficients cartan_general(const RefractiveProfile& profile, const PhasePoint& p,
                                  double step_scale = 1.0);

}  // namespace aniso
