#pragma once
#include "aniso/connection.hpp"
#include "aniso/geom.hpp"
#include "aniso/media.hpp"

namespace aniso {

// the three effective torsion d-tensors of the Cartan connection
// R^i_jk = dN^i_j/dx^k - dN^i_k/dx^j (adapted derivatives)
// P^i_jk = dN^i_j/dy^k - L^i_kj
// C^i_jk shared with the Cartan coefficients
struct TorsionSet {
  Ten3 R{};
  Ten3 P{};
  Ten3 C{};
};

// the three effective curvature d-tensors, stored [i][j][k][l]
struct CurvatureSet {
  Ten4 R4{};
  Ten4 P4{};
  Ten4 S4{};
};

struct MetricityResiduals {
  Ten3 h{};  // delta g_ij/dx^k - L^r_ik g_rj - L^r_jk g_ir
  Ten3 v{};  // d g_ij/dy^k - C^r_ik g_rj - C^r_jk g_ir
};

// step_scale multiplies every finite-difference step (step-halving checks)
TorsionSet torsions(const RefractiveProfile& profile, const PhasePoint& p,
                    double step_scale = 1.0);

// C^i_{jl|k} = delta C^i_jl/dx^k + C^r_jl L^i_rk - C^i_rl L^r_jk - C^i_jr L^r_lk
// stored [i][j][l][k] (four free indices; the P curvature contracts all of them)
Ten4 h_covariant_C(const RefractiveProfile& profile, const PhasePoint& p,
                   double step_scale = 1.0);

CurvatureSet curvatures(const RefractiveProfile& profile, const PhasePoint& p,
                        double step_scale = 1.0);

MetricityResiduals metricity_residuals(const RefractiveProfile& profile, const PhasePoint& p,
                                       double step_scale = 1.0);

}  // namespace aniso
