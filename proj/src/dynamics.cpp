#include "aniso/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "aniso/metric.hpp"

namespace aniso {

Vec3 motion_rhs(const RefractiveProfile& profile, const Vec3& x, const Vec3& v) {
  const double g = profile.gamma(x);
  const Vec3 gs = profile.gamma_gradient(x);
  const double v2 = norm2(v);
  const double g2v2 = g * g * v2;
  const double c1 = 4.0 * g * v2 * (1.0 + 3.0 * g2v2) / ((1.0 + 2.0 * g2v2) * (1.0 + 6.0 * g2v2));
  const double c2 = g * v2 * v2 / (1.0 + 2.0 * g2v2);
  const double gv = dot(gs, v);
  Vec3 a{};
  for (int i = 0; i < 3; i++) a[i] = -c1 * gv * v[i] + c2 * gs[i];
  return a;
}

Vec3 el_residual(const RefractiveProfile& profile, const Curve& curve, double t) {
  const CurveState s = curve(t);
  return s.a - motion_rhs(profile, s.x, s.v);
}

void IntegratorConfig::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
    throw std::invalid_argument("integrator tolerances must be > 0");
  if (!(t1 > t0)) throw std::invalid_argument("integrator t_span requires t1 > t0");
  if (max_step < 0.0) throw std::invalid_argument("integrator max_step must be >= 0");
  if (sample_every < 0.0) throw std::invalid_argument("integrator sample_every must be >= 0");
}

namespace {

using State = std::array<double, 6>;  // (x, v)

State pack(const Vec3& x, const Vec3& v) {
  return {x[0], x[1], x[2], v[0], v[1], v[2]};
}
Vec3 pos(const State& s) { return {s[0], s[1], s[2]}; }
Vec3 vel(const State& s) { return {s[3], s[4], s[5]}; }

State sub_scaled(const State& a, double c, const State& b) {
  State r{};
  for (int i = 0; i < 6; i++) r[i] = a[i] + c * b[i];
  return r;
}

// Dormand-Prince 5(4) tableau
constexpr double A21 = 1.0 / 5;
constexpr double A31 = 3.0 / 40, A32 = 9.0 / 40;
constexpr double A41 = 44.0 / 45, A42 = -56.0 / 15, A43 = 32.0 / 9;
constexpr double A51 = 19372.0 / 6561, A52 = -25360.0 / 2187, A53 = 64448.0 / 6561,
                 A54 = -212.0 / 729;
constexpr double A61 = 9017.0 / 3168, A62 = -355.0 / 33, A63 = 46732.0 / 5247, A64 = 49.0 / 176,
                 A65 = -5103.0 / 18656;
constexpr double A71 = 35.0 / 384, A73 = 500.0 / 1113, A74 = 125.0 / 192, A75 = -2187.0 / 6784,
                 A76 = 11.0 / 84;
constexpr double E1 = 71.0 / 57600, E3 = -71.0 / 16695, E4 = 71.0 / 1920, E5 = -17253.0 / 339200,
                 E6 = 22.0 / 525, E7 = -1.0 / 40;
// dense-output weights
constexpr double D1 = -12715105075.0 / 11282082432.0;
constexpr double D3 = 87487479700.0 / 32700410799.0;
constexpr double D4 = -10690763975.0 / 1880347072.0;
constexpr double D5 = 701980252875.0 / 199316789632.0;
constexpr double D6 = -1453857185.0 / 822651844.0;
constexpr double D7 = 69997945.0 / 29380423.0;

struct DenseSegment {
  double t, h;
  State c1, c2, c3, c4, c5;

  State eval(double ti) const {
    const double th = (ti - t) / h;
    const double th1 = 1.0 - th;
    State r{};
    for (int i = 0; i < 6; i++)
      r[i] = c1[i] + th * (c2[i] + th1 * (c3[i] + th * (c4[i] + th1 * c5[i])));
    return r;
  }
};

}  // namespace

Trajectory integrate(const RefractiveProfile& profile, const Vec3& x0, const Vec3& v0,
                     const IntegratorConfig& cfg) {
  cfg.validate();

  Trajectory traj;
  traj.profile_desc = profile.describe();
  traj.config = cfg;

  const double span = cfg.t1 - cfg.t0;
  const double h_min = 1e-14 * span;
  const double h_max = cfg.max_step > 0.0 ? std::min(cfg.max_step, span) : span;

  bool domain_failure = false;
  auto rhs = [&](const State& s, State& ds) -> bool {
    try {
      const Vec3 v = vel(s);
      const Vec3 a = motion_rhs(profile, pos(s), v);
      ds = {v[0], v[1], v[2], a[0], a[1], a[2]};
    } catch (const std::domain_error&) {
      domain_failure = true;
      return false;
    }
    for (double e : ds)
      if (!std::isfinite(e)) {
        domain_failure = true;
        return false;
      }
    return true;
  };

  bool record_failed = false;
  auto record = [&](double t, const State& s) {
    if (record_failed) return;
    try {
      traj.samples.push_back({t, pos(s), vel(s), energy(profile, {pos(s), vel(s)})});
    } catch (const std::domain_error&) {
      record_failed = true;  // dense sample crossed the domain boundary
    }
  };

  State y = pack(x0, v0);
  double t = cfg.t0;
  record(t, y);
  double next_sample = cfg.sample_every > 0.0 ? cfg.t0 + cfg.sample_every : 0.0;

  State k1{};
  if (!rhs(y, k1)) {
    traj.status = IntegrationStatus::DomainExit;
    traj.message = "initial state outside the profile domain";
    return traj;
  }

  // initial step size (Hairer-style, one extra evaluation)
  auto sc_norm = [&](const State& a, const State& ref) {
    double s = 0.0;
    for (int i = 0; i < 6; i++) {
      const double sc = cfg.abs_tol + cfg.rel_tol * std::abs(ref[i]);
      s += (a[i] / sc) * (a[i] / sc);
    }
    return std::sqrt(s / 6.0);
  };
  double h;
  {
    const double d0 = sc_norm(y, y);
    const double d1 = sc_norm(k1, y);
    double h0 = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 * span : 0.01 * (d0 / d1);
    h0 = std::min(h0, h_max);
    State y1 = sub_scaled(y, h0, k1), f1{};
    if (rhs(y1, f1)) {
      double d2 = 0.0;
      for (int i = 0; i < 6; i++) {
        const double sc = cfg.abs_tol + cfg.rel_tol * std::abs(y[i]);
        d2 += ((f1[i] - k1[i]) / sc) * ((f1[i] - k1[i]) / sc);
      }
      d2 = std::sqrt(d2 / 6.0) / h0;
      const double dm = std::max(d1, d2);
      const double h1 = dm > 1e-15 ? std::pow(0.01 / dm, 0.2) : std::max(1e-6 * span, h0 * 1e-3);
      h = std::min({100.0 * h0, h1, h_max});
    } else {
      domain_failure = false;
      h = std::min(h0, h_max);
    }
  }

  constexpr double safe = 0.9, beta = 0.04, expo1 = 0.2 - beta * 0.75;
  double facold = 1e-4;
  const long max_steps = 50'000'000;

  for (long step = 0; step < max_steps && t < cfg.t1; step++) {
    h = std::min(h, cfg.t1 - t);
    const bool last = (cfg.t1 - t - h <= 1e-12 * span);

    State k2{}, k3{}, k4{}, k5{}, k6{}, k7{}, ynew{};
    bool ok = true;
    State tmp{};
    auto stage = [&](State& k, std::initializer_list<std::pair<double, const State*>> terms) {
      tmp = y;
      for (const auto& [c, ks] : terms) tmp = sub_scaled(tmp, h * c, *ks);
      return rhs(tmp, k);
    };
    ok = ok && stage(k2, {{A21, &k1}});
    ok = ok && stage(k3, {{A31, &k1}, {A32, &k2}});
    ok = ok && stage(k4, {{A41, &k1}, {A42, &k2}, {A43, &k3}});
    ok = ok && stage(k5, {{A51, &k1}, {A52, &k2}, {A53, &k3}, {A54, &k4}});
    ok = ok && stage(k6, {{A61, &k1}, {A62, &k2}, {A63, &k3}, {A64, &k4}, {A65, &k5}});
    if (ok) {
      for (int i = 0; i < 6; i++)
        ynew[i] = y[i] + h * (A71 * k1[i] + A73 * k3[i] + A74 * k4[i] + A75 * k5[i] + A76 * k6[i]);
      ok = rhs(ynew, k7);  // FSAL
    }

    if (!ok) {
      traj.rejected++;
      h *= 0.5;
      if (h < h_min) {
        traj.status = domain_failure ? IntegrationStatus::DomainExit
                                     : IntegrationStatus::StepUnderflow;
        traj.message = domain_failure ? "state left the profile domain"
                                      : "step size underflow";
        break;
      }
      continue;
    }

    double err_norm = 0.0;
    for (int i = 0; i < 6; i++) {
      const double e =
          h * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] + E6 * k6[i] + E7 * k7[i]);
      const double sc = cfg.abs_tol + cfg.rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
      err_norm += (e / sc) * (e / sc);
    }
    err_norm = std::sqrt(err_norm / 6.0);

    const double fac11 = std::pow(std::max(err_norm, 1e-30), expo1);
    if (err_norm <= 1.0) {
      traj.accepted++;
      // dense output over [t, t+h]
      DenseSegment seg;
      seg.t = t;
      seg.h = h;
      for (int i = 0; i < 6; i++) {
        const double ydiff = ynew[i] - y[i];
        const double bspl = h * k1[i] - ydiff;
        seg.c1[i] = y[i];
        seg.c2[i] = ydiff;
        seg.c3[i] = bspl;
        seg.c4[i] = ydiff - h * k7[i] - bspl;
        seg.c5[i] = h * (D1 * k1[i] + D3 * k3[i] + D4 * k4[i] + D5 * k5[i] + D6 * k6[i] +
                         D7 * k7[i]);
      }
      const double t_new = last ? cfg.t1 : t + h;
      const double tiny = 1e-12 * span;
      if (cfg.sample_every > 0.0) {
        while (next_sample <= t_new + tiny && next_sample < cfg.t1 - tiny) {
          record(next_sample, seg.eval(next_sample));
          next_sample += cfg.sample_every;
        }
        if (last) record(cfg.t1, ynew);
      } else {
        record(t_new, ynew);
      }

      if (record_failed) {
        traj.status = IntegrationStatus::DomainExit;
        traj.message = "sample state left the profile domain";
        break;
      }

      const double fac11_a = fac11;
      t = t_new;
      y = ynew;
      k1 = k7;

      double fac = fac11_a / std::pow(facold, beta);
      fac = std::max(0.2, std::min(5.0, fac / safe));
      facold = std::max(err_norm, 1e-4);
      h = std::min(h / fac, h_max);
    } else {
      traj.rejected++;
      const double fac = std::min(5.0, std::max(0.2, fac11 / safe));
      h = h / fac;
      if (h < h_min) {
        traj.status = IntegrationStatus::StepUnderflow;
        traj.message = "step size underflow";
        break;
      }
    }
  }

  if (traj.status == IntegrationStatus::Ok && t < cfg.t1 - 1e-12 * span) {
    traj.status = IntegrationStatus::StepUnderflow;
    traj.message = "maximum step count exceeded";
  }
  return traj;
}

Trajectory integrate_rk4(const RefractiveProfile& profile, const Vec3& x0, const Vec3& v0,
                         const IntegratorConfig& cfg, long steps) {
  cfg.validate();
  if (steps < 1) throw std::invalid_argument("rk4 cross-check requires steps >= 1");

  Trajectory traj;
  traj.profile_desc = profile.describe();
  traj.config = cfg;

  auto rhs = [&](const State& s) -> State {
    const Vec3 v = vel(s);
    const Vec3 a = motion_rhs(profile, pos(s), v);
    return {v[0], v[1], v[2], a[0], a[1], a[2]};
  };

  const double h = (cfg.t1 - cfg.t0) / static_cast<double>(steps);
  State y = pack(x0, v0);
  traj.samples.push_back({cfg.t0, pos(y), vel(y), energy(profile, {pos(y), vel(y)})});
  for (long n = 0; n < steps; n++) {
    const State k1 = rhs(y);
    const State k2 = rhs(sub_scaled(y, h / 2, k1));
    const State k3 = rhs(sub_scaled(y, h / 2, k2));
    const State k4 = rhs(sub_scaled(y, h, k3));
    for (int i = 0; i < 6; i++) y[i] += h / 6.0 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    traj.accepted++;
    const double t = cfg.t0 + h * static_cast<double>(n + 1);
    traj.samples.push_back({t, pos(y), vel(y), energy(profile, {pos(y), vel(y)})});
  }
  return traj;
}

}  // namespace aniso
