#pragma once
#include <utility>

#include "aniso/geom.hpp"
#include "aniso/media.hpp"

namespace aniso {

// sigma = 1/2 + gamma^2 ||y||^2,  tau = 1/2 + 3 gamma^2 ||y||^2; both > 0
std::pair<double, double> sigma_tau(const RefractiveProfile& profile, const PhasePoint& p);

// L = 1/2 delta_ij y^i y^j + (gamma^2/2) ||y||^4
double lagrangian(const RefractiveProfile& profile, const PhasePoint& p);

// g_ij = sigma delta_ij + 2 gamma^2 y_i y_j  (= 1/2 d^2L/dy^i dy^j)
Mat3 fundamental_tensor(const RefractiveProfile& profile, const PhasePoint& p);

// g^{jk} = (1/sigma) delta^{jk} - (2 gamma^2/(sigma tau)) y^j y^k
Mat3 inverse_fundamental_tensor(const RefractiveProfile& profile, const PhasePoint& p);

/// Conserved energy of the autonomous Lagrangian (Legendre form y.dL/dy - L):
/// E = 1/2 ||y||^2 + (3/2) gamma^2 ||y||^4. Constant along equations-of-motion
/// solutions.
double energy(const RefractiveProfile& profile, const PhasePoint& p);

// 1/2 x central-difference Hessian of the Lagrangian in y; oracle for
// fundamental_tensor
Mat3 hessian_oracle(const RefractiveProfile& profile, const PhasePoint& p);

struct NonlinearConnection;

// cached geometric objects at one phase point
struct GeometryBundle {
  double sigma = 0.0;
  double tau = 0.0;
  Mat3 g{};
  Mat3 g_inv{};
  Vec3 G{};  // semispray
  Mat3 N{};  // nonlinear connection, N[i][j] = N^i_j
};

GeometryBundle geometry_bundle(const RefractiveProfile& profile, const PhasePoint& p);

}  // namespace aniso
