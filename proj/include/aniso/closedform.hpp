#pragma once
#include <optional>
#include <string>
#include <vector>

#include "aniso/dynamics.hpp"
#include "aniso/geom.hpp"
#include "aniso/media.hpp"

namespace aniso {

/// Circular-helix geodesic at fixed cylinder radius rho0:
///   x(t) = (rho0 cos(omega0 t + phi0), rho0 sin(omega0 t + phi0), t)
/// omega0 solves rho * omega^2 + f f' v^4/(1 + 2 f^2 v^2) = 0 with
/// v^2 = rho^2 omega^2 + 1; equivalently u = v^2 solves the quadratic
///   f (2f + rho f') u^2 + (1 - 2 f^2) u - 1 = 0.
struct HelixFamily {
  double rho0 = 0.0;
  double omega0 = 0.0;
  double phi0 = 0.0;
  int sign_omega = +1;  // orientation of rotation
  int sign_sqrt = +1;   // branch of the quadratic's discriminant root
  double v2 = 0.0;      // = rho0^2 omega0^2 + 1 > 1
  double residual = 0.0;
};

enum class CircleKind {
  HorizontalOnAxis,        // plane parallel to xOy, center on Oz
  OriginEquatorial,        // in the plane xOy, center at the origin
  VerticalThroughOrigin,   // great circle in a vertical plane through the origin
};

/// Circle geodesic family. `radius` is the defining root (of the cubic
/// 1 + 2 f^2 s^2 + f f' s^3 or of f' = 0 for latitude circles); plane_param is
/// zeta0 (cylindrical horizontal), theta0 (spherical latitude) or phi0
/// (vertical plane) depending on kind and generating symmetry.
struct CircleFamily {
  CircleKind kind = CircleKind::HorizontalOnAxis;
  Symmetry symmetry = Symmetry::Cylindrical;
  double radius = 0.0;
  double plane_param = 0.0;
  double residual = 0.0;
};

enum class LineKind { UniformStraightLine, CylinderGenerator, ZAxisSegment };

struct LineFamily {
  LineKind kind = LineKind::UniformStraightLine;
  Vec3 x0{};       // uniform straight line
  Vec3 v{};
  double rho0 = 0.0, phi0 = 0.0;  // cylinder generator
  double r0 = 0.0, v0 = 0.0;      // z-axis segment initial condition
  double residual = 0.0;
};

/// All omega0 branches at the given radius: the (+-, +-) sign combinations are
/// enumerated, then filtered by discriminant >= 0, u > 1 and a direct
/// substitution residual < 1e-10. Empty when no branch qualifies (e.g. at
/// radii where f' = 0, where only the stationary omega = 0 root exists).
std::vector<HelixFamily> helix_omegas(const RefractiveProfile& profile, double rho);

// the paper-style existence predicate at rho (diagnostic; branch enumeration
// above is the gate). True iff one of the two case conditions on 2f + rho f'
// holds.
bool helix_interval_predicate(const RefractiveProfile& profile, double rho);

// scalar equation-of-motion residual for a candidate helix angular velocity
double helix_equation_residual(const RefractiveProfile& profile, double rho, double omega);

/// Roots of 1 + 2 f^2 s^2 + f f' s^3 on [lo, hi] (horizontal circles for
/// cylindrical profiles, origin-centered equatorial circles for spherical
/// ones). Empty result is not an error.
std::vector<CircleFamily> circle_radii(const RefractiveProfile& profile, double lo, double hi);

// vertical-line geodesics at radii where f' = 0 (cylindrical profiles)
std::vector<LineFamily> generator_radii(const RefractiveProfile& profile, double lo, double hi);

/// Spherical-profile circle families: equatorial + vertical-plane families
/// from the cubic roots. Off-equator latitude circles at f'(r0) = 0 are not
/// solutions of the motion equations (the gradient force vanishes exactly
/// where the centripetal term is needed) and are never returned.
std::vector<CircleFamily> sphere_circle_families(const RefractiveProfile& profile, double lo,
                                                 double hi);

// the would-be latitude circle at an f' root; a diagnostic candidate whose
// trajectory provably fails el_residual, never a solution family
CircleFamily latitude_circle_candidate(const RefractiveProfile& profile, double r0,
                                       double theta0);

/// Radial speed F(s) of the would-be dr/dt != 0 solution, present only inside
/// the existence window 2f + s f' in (-(1+4s^2f^2)/(2s^2f(1+3s^2f^2)), 0) and
/// when the radicand is nonnegative. Curves built from dr/dt = F(r) never
/// solve the full system; exposed for exploration.
std::optional<double> incompatibility_probe(const RefractiveProfile& profile, double s);

// exact parametric sampling of a family (energy column included); z-axis
// segments have no closed form and are sampled with the adaptive integrator
Trajectory make_trajectory(const RefractiveProfile& profile, const HelixFamily& fam, double t0,
                           double t1, double sample_every);
Trajectory make_trajectory(const RefractiveProfile& profile, const CircleFamily& fam, double t0,
                           double t1, double sample_every);
Trajectory make_trajectory(const RefractiveProfile& profile, const LineFamily& fam, double t0,
                           double t1, double sample_every);

// analytic curve (with acceleration) for residual checks
Curve analytic_curve(const HelixFamily& fam);
Curve analytic_curve(const CircleFamily& fam);
Curve analytic_curve(const LineFamily& fam);

std::string kind_name(CircleKind k);
std::string kind_name(LineKind k);

}  // namespace aniso
