#include "aniso/closedform.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "aniso/metric.hpp"
#include "aniso/rootfind.hpp"

namespace aniso {

namespace {

void require_radial(const RefractiveProfile& profile, const char* what) {
  if (profile.symmetry() == Symmetry::None)
    throw std::invalid_argument(std::string(what) + " requires a radial profile");
}

void require_bracket(double lo, double hi) {
  if (!(0.0 < lo && lo < hi)) throw std::invalid_argument("bracket requires 0 < lo < hi");
}

// 1 + 2 f^2 s^2 + f f' s^3, the shared circle-radius condition
double circle_cubic(const RefractiveProfile& profile, double s) {
  const auto [f, fp] = profile.radial_f(s);
  return 1.0 + 2.0 * f * f * s * s + f * fp * s * s * s;
}

Trajectory sample_curve(const RefractiveProfile& profile, const Curve& curve, double t0, double t1,
                        double every) {
  if (!(t1 > t0)) throw std::invalid_argument("trajectory span requires t1 > t0");
  if (!(every > 0.0)) throw std::invalid_argument("trajectory sampling interval must be > 0");
  Trajectory tr;
  tr.profile_desc = profile.describe();
  tr.config.t0 = t0;
  tr.config.t1 = t1;
  tr.config.sample_every = every;
  const double tiny = 1e-12 * (t1 - t0);
  for (double t = t0; t < t1 - tiny; t += every) {
    const CurveState s = curve(t);
    tr.samples.push_back({t, s.x, s.v, energy(profile, {s.x, s.v})});
  }
  const CurveState s = curve(t1);
  tr.samples.push_back({t1, s.x, s.v, energy(profile, {s.x, s.v})});
  return tr;
}

}  // namespace

double helix_equation_residual(const RefractiveProfile& profile, double rho, double omega) {
  const auto [f, fp] = profile.radial_f(rho);
  const double u = rho * rho * omega * omega + 1.0;
  return rho * omega * omega + f * fp * u * u / (1.0 + 2.0 * f * f * u);
}

bool helix_interval_predicate(const RefractiveProfile& profile, double rho) {
  const auto [f, fp] = profile.radial_f(rho);
  const double w = 2.0 * f + rho * fp;
  const double b = 2.0 * f * f - 1.0;
  if (b < 0.0) {
    const double lower = -b * b / (4.0 * f);
    return (w >= lower && w < 0.0) || (w > 0.0 && w < 2.0 * f);
  }
  if (b > 0.0) return w > 0.0 && w < 2.0 * f;
  return false;
}

std::vector<HelixFamily> helix_omegas(const RefractiveProfile& profile, double rho) {
  if (profile.symmetry() != Symmetry::Cylindrical)
    throw std::invalid_argument("helix solutions require a cylindrical profile");
  if (!(rho > 0.0)) throw std::invalid_argument("helix radius must be > 0");

  const auto [f, fp] = profile.radial_f(rho);
  const double a = f * (2.0 * f + rho * fp);
  const double b = 1.0 - 2.0 * f * f;

  // roots of a u^2 + b u - 1 = 0 in u = v^2, tagged by discriminant sign
  std::vector<std::pair<double, int>> roots;
  if (a == 0.0) {
    // singular quadratic: 2f + rho f' = 0 degenerates the equation to linear
    if (b != 0.0) roots.emplace_back(1.0 / b, +1);
  } else {
    const double disc = b * b + 4.0 * a;
    if (disc >= 0.0) {
      const double sq = std::sqrt(disc);
      double u_plus = (-b + sq) / (2.0 * a);
      double u_minus = (-b - sq) / (2.0 * a);
      // repair the cancellation-prone root via the product u+ u- = -1/a
      if (b > 0.0 && u_minus != 0.0)
        u_plus = (-1.0 / a) / u_minus;
      else if (b < 0.0 && u_plus != 0.0)
        u_minus = (-1.0 / a) / u_plus;
      roots.emplace_back(u_plus, +1);
      roots.emplace_back(u_minus, -1);
    }
  }

  std::vector<HelixFamily> out;
  for (const auto& [u, tag] : roots) {
    if (!std::isfinite(u)) continue;
    if (u - 1.0 <= 1e-12 * std::max(1.0, u)) continue;  // the stationary omega=0 root
    double omega = std::sqrt(u - 1.0) / rho;

    // Newton polish on the scalar equation; d(residual)/d omega is analytic
    for (int it = 0; it < 3; it++) {
      const double uu = rho * rho * omega * omega + 1.0;
      const double den = 1.0 + 2.0 * f * f * uu;
      const double psi_p = (2.0 * uu + 2.0 * f * f * uu * uu) / (den * den);
      const double slope = 2.0 * rho * omega + f * fp * psi_p * 2.0 * rho * rho * omega;
      if (slope == 0.0) break;
      const double r = helix_equation_residual(profile, rho, omega);
      const double next = omega - r / slope;
      if (!(next > 0.0) || !std::isfinite(next)) break;
      omega = next;
    }
    const double res = std::abs(helix_equation_residual(profile, rho, omega));
    if (!(res < 1e-10)) continue;

    for (int sign : {+1, -1}) {
      HelixFamily h;
      h.rho0 = rho;
      h.omega0 = sign * omega;
      h.sign_omega = sign;
      h.sign_sqrt = tag;
      h.v2 = rho * rho * omega * omega + 1.0;
      h.residual = res;
      out.push_back(h);
    }
  }
  return out;
}

std::vector<CircleFamily> circle_radii(const RefractiveProfile& profile, double lo, double hi) {
  require_radial(profile, "circle radii");
  require_bracket(lo, hi);
  auto cubic = [&](double s) { return circle_cubic(profile, s); };
  std::vector<CircleFamily> out;
  for (double r : find_roots(cubic, lo, hi)) {
    CircleFamily c;
    c.symmetry = profile.symmetry();
    c.kind = profile.symmetry() == Symmetry::Spherical ? CircleKind::OriginEquatorial
                                                       : CircleKind::HorizontalOnAxis;
    c.radius = r;
    c.plane_param = 0.0;
    c.residual = std::abs(cubic(r));
    out.push_back(c);
  }
  return out;
}

std::vector<LineFamily> generator_radii(const RefractiveProfile& profile, double lo, double hi) {
  if (profile.symmetry() != Symmetry::Cylindrical)
    throw std::invalid_argument("generator lines require a cylindrical profile");
  require_bracket(lo, hi);
  auto fprime = [&](double s) { return profile.radial_f(s).second; };
  std::vector<LineFamily> out;
  for (double r : find_roots(fprime, lo, hi)) {
    LineFamily l;
    l.kind = LineKind::CylinderGenerator;
    l.rho0 = r;
    l.phi0 = 0.0;
    l.residual = std::abs(fprime(r));
    out.push_back(l);
  }
  return out;
}

std::vector<CircleFamily> sphere_circle_families(const RefractiveProfile& profile, double lo,
                                                 double hi) {
  if (profile.symmetry() != Symmetry::Spherical)
    throw std::invalid_argument("sphere circle families require a spherical profile");
  require_bracket(lo, hi);

  std::vector<CircleFamily> out = circle_radii(profile, lo, hi);
  const size_t n_equatorial = out.size();
  for (size_t i = 0; i < n_equatorial; i++) {
    CircleFamily v = out[i];
    v.kind = CircleKind::VerticalThroughOrigin;
    v.plane_param = 0.0;  // phi0, free
    out.push_back(v);
  }
  // Latitude circles at f'(r0) = 0, theta0 != pi/2 are NOT emitted: at an f'
  // root the gamma gradient vanishes, so the motion equations demand zero
  // acceleration while the circle needs a centripetal term of magnitude
  // r0 sin(theta0). latitude_circle_candidate exposes them for diagnosis; the
  // residual tests pin down that they never solve the full system.
  return out;
}

CircleFamily latitude_circle_candidate(const RefractiveProfile& profile, double r0,
                                       double theta0) {
  if (profile.symmetry() != Symmetry::Spherical)
    throw std::invalid_argument("latitude candidates require a spherical profile");
  CircleFamily c;
  c.kind = CircleKind::HorizontalOnAxis;
  c.symmetry = Symmetry::Spherical;
  c.radius = r0;
  c.plane_param = theta0;
  c.residual = std::abs(profile.radial_f(r0).second);
  return c;
}

std::optional<double> incompatibility_probe(const RefractiveProfile& profile, double s) {
  require_radial(profile, "incompatibility probe");
  const auto [f, fp] = profile.radial_f(s);
  const double w = 2.0 * f + s * fp;
  const double s2f2 = s * s * f * f;
  const double lower = -(1.0 + 4.0 * s2f2) / (2.0 * s * s * f * (1.0 + 3.0 * s2f2));
  if (!(w > lower && w < 0.0)) return std::nullopt;
  const double dp = 4.0 * std::pow(f, 4) + s * s * f * f * fp * fp + 2.0 * s * f * f * f * fp;
  if (dp < 0.0) return std::nullopt;
  const double u = (-4.0 * f * f - s * f * fp - std::sqrt(dp)) / (6.0 * f * f * f * w);
  const double radicand = u - s * s;
  if (radicand < 0.0) return std::nullopt;
  return std::sqrt(radicand);
}

Curve analytic_curve(const HelixFamily& fam) {
  return [fam](double t) -> CurveState {
    const double phi = fam.omega0 * t + fam.phi0;
    const double c = std::cos(phi), s = std::sin(phi);
    const double r = fam.rho0, w = fam.omega0;
    return {{r * c, r * s, t}, {-r * w * s, r * w * c, 1.0}, {-r * w * w * c, -r * w * w * s, 0.0}};
  };
}

Curve analytic_curve(const CircleFamily& fam) {
  double radius = fam.radius, z = 0.0;
  switch (fam.kind) {
    case CircleKind::HorizontalOnAxis:
      if (fam.symmetry == Symmetry::Spherical) {
        radius = fam.radius * std::sin(fam.plane_param);
        z = fam.radius * std::cos(fam.plane_param);
      } else {
        z = fam.plane_param;
      }
      break;
    case CircleKind::OriginEquatorial:
      break;
    case CircleKind::VerticalThroughOrigin: {
      const double r0 = fam.radius, cp = std::cos(fam.plane_param), sp = std::sin(fam.plane_param);
      return [r0, cp, sp](double t) -> CurveState {
        const double c = std::cos(t), s = std::sin(t);
        return {{r0 * cp * s, r0 * sp * s, r0 * c},
                {r0 * cp * c, r0 * sp * c, -r0 * s},
                {-r0 * cp * s, -r0 * sp * s, -r0 * c}};
      };
    }
  }
  return [radius, z](double t) -> CurveState {
    const double c = std::cos(t), s = std::sin(t);
    return {{radius * c, radius * s, z}, {-radius * s, radius * c, 0.0},
            {-radius * c, -radius * s, 0.0}};
  };
}

Curve analytic_curve(const LineFamily& fam) {
  switch (fam.kind) {
    case LineKind::UniformStraightLine: {
      const Vec3 x0 = fam.x0, v = fam.v;
      return [x0, v](double t) -> CurveState { return {x0 + t * v, v, {0.0, 0.0, 0.0}}; };
    }
    case LineKind::CylinderGenerator: {
      const double x = fam.rho0 * std::cos(fam.phi0), y = fam.rho0 * std::sin(fam.phi0);
      return [x, y](double t) -> CurveState { return {{x, y, t}, {0.0, 0.0, 1.0}, {0.0, 0.0, 0.0}}; };
    }
    case LineKind::ZAxisSegment:
      throw std::invalid_argument("z-axis segments have no closed-form curve");
  }
  throw std::logic_error("unreachable line kind");
}

Trajectory make_trajectory(const RefractiveProfile& profile, const HelixFamily& fam, double t0,
                           double t1, double sample_every) {
  return sample_curve(profile, analytic_curve(fam), t0, t1, sample_every);
}

Trajectory make_trajectory(const RefractiveProfile& profile, const CircleFamily& fam, double t0,
                           double t1, double sample_every) {
  return sample_curve(profile, analytic_curve(fam), t0, t1, sample_every);
}

Trajectory make_trajectory(const RefractiveProfile& profile, const LineFamily& fam, double t0,
                           double t1, double sample_every) {
  if (fam.kind == LineKind::ZAxisSegment) {
    IntegratorConfig cfg;
    cfg.t0 = t0;
    cfg.t1 = t1;
    cfg.sample_every = sample_every;
    return integrate(profile, {0.0, 0.0, fam.r0}, {0.0, 0.0, fam.v0}, cfg);
  }
  return sample_curve(profile, analytic_curve(fam), t0, t1, sample_every);
}

std::string kind_name(CircleKind k) {
  switch (k) {
    case CircleKind::HorizontalOnAxis: return "horizontal-on-axis";
    case CircleKind::OriginEquatorial: return "origin-centered-equatorial";
    case CircleKind::VerticalThroughOrigin: return "vertical-plane-through-origin";
  }
  return "?";
}

std::string kind_name(LineKind k) {
  switch (k) {
    case LineKind::UniformStraightLine: return "uniform-straight-line";
    case LineKind::CylinderGenerator: return "cylinder-generator";
    case LineKind::ZAxisSegment: return "z-axis-segment";
  }
  return "?";
}

}  // namespace aniso
