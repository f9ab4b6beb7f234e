#pragma once
#include <functional>
#include <string>
#include <vector>

#include "aniso/geom.hpp"
#include "aniso/media.hpp"

namespace aniso {

/// Acceleration of the anisotropic equations of motion, solved for dV/dt:
///   dV^i/dt = -[4 g v^2 (1+3g^2v^2) / ((1+2g^2v^2)(1+6g^2v^2))] (g_s V^s) V^i
///             + [g v^4 / (1+2g^2v^2)] g^i                (g = gamma(x))
/// Coded directly from this form; equals -2 * semispray identically, which the
/// tests use as a cross-check between the two code paths.
Vec3 motion_rhs(const RefractiveProfile& profile, const Vec3& x, const Vec3& v);

struct IntegratorConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double max_step = 0.0;  // 0 = unlimited
  double t0 = 0.0;
  double t1 = 1.0;
  double sample_every = 0.0;  // 0 = record every accepted step

  void validate() const;  // throws std::invalid_argument
};

struct TrajectorySample {
  double t;
  Vec3 x;
  Vec3 v;
  double energy;
};

enum class IntegrationStatus { Ok, DomainExit, StepUnderflow };

struct Trajectory {
  std::vector<TrajectorySample> samples;
  std::string profile_desc;
  IntegratorConfig config;
  long accepted = 0;
  long rejected = 0;
  IntegrationStatus status = IntegrationStatus::Ok;
  std::string message;

  bool truncated() const { return status != IntegrationStatus::Ok; }
};

/// Dormand-Prince 5(4) with PI step control and 4th-order dense output on the
/// first-order system (dx = v, dv = motion_rhs). Truncates with a typed status
/// when the state leaves the profile domain or the step underflows
/// (h < 1e-14 * span).
Trajectory integrate(const RefractiveProfile& profile, const Vec3& x0, const Vec3& v0,
                     const IntegratorConfig& cfg);

// fixed-step classical RK4 cross-check mode
Trajectory integrate_rk4(const RefractiveProfile& profile, const Vec3& x0, const Vec3& v0,
                         const IntegratorConfig& cfg, long steps);

struct CurveState {
  Vec3 x;
  Vec3 v;
  Vec3 a;
};
using Curve = std::function<CurveState(double)>;

// residual of the equations of motion along an arbitrary curve:
// a - motion_rhs(x, v); zero iff the curve solves them at t
Vec3 el_residual(const RefractiveProfile& profile, const Curve& curve, double t);

}  // namespace aniso
