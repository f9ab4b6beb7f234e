#include "aniso/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <stdexcept>

#include "aniso/closedform.hpp"
#include "aniso/connection.hpp"
#include "aniso/curvature.hpp"
#include "aniso/dynamics.hpp"
#include "aniso/metric.hpp"
#include "aniso/rng.hpp"
#include "aniso/rootfind.hpp"

namespace aniso {

VerifySuite suite_from_string(const std::string& s) {
  if (s == "all") return VerifySuite::All;
  if (s == "metric") return VerifySuite::Metric;
  if (s == "connection") return VerifySuite::Connection;
  if (s == "curvature") return VerifySuite::Curvature;
  if (s == "dynamics") return VerifySuite::Dynamics;
  if (s == "closedform") return VerifySuite::Closedform;
  throw std::invalid_argument("unknown verify suite \"" + s + "\"");
}

namespace {

RefractiveProfile uniform_profile() { return RefractiveProfile::uniform(std::sqrt(2.0)); }
RefractiveProfile mirage_sph() {
  return RefractiveProfile::gaussian_mirage(1.0, 2.5, Symmetry::Spherical);
}
RefractiveProfile mirage_cyl() {
  return RefractiveProfile::gaussian_mirage(1.0, 2.5, Symmetry::Cylindrical);
}
RefractiveProfile ring_cyl() { return RefractiveProfile::gaussian_ring(1.0, 1.0, 2.0, 1.0); }

std::vector<RefractiveProfile> all_families() {
  return {uniform_profile(), mirage_sph(), mirage_cyl(), ring_cyl()};
}
std::vector<RefractiveProfile> radial_families() {
  return {mirage_sph(), mirage_cyl(), ring_cyl()};
}

// sample away from the symmetry axis (user/ring gradients are singular there)
PhasePoint random_point(SplitMix64& rng, const RefractiveProfile& profile) {
  PhasePoint p;
  p.y = rng.box(1.3);
  switch (profile.symmetry()) {
    case Symmetry::None:
      p.x = rng.box(3.0);
      break;
    case Symmetry::Cylindrical: {
      const double s = rng.uniform(0.4, 4.5), phi = rng.uniform(0.0, 2.0 * M_PI);
      p.x = {s * std::cos(phi), s * std::sin(phi), rng.uniform(-2.5, 2.5)};
      break;
    }
    case Symmetry::Spherical: {
      const double r = rng.uniform(0.4, 4.5);
      p.x = r * rng.unit_vector();
      break;
    }
  }
  return p;
}

struct Runner {
  uint64_t seed;
  std::vector<CheckResult> results;

  void check(const std::string& name, double value, double threshold,
             bool greater_is_pass = false) {
    CheckResult r;
    r.name = name;
    r.value = value;
    r.threshold = threshold;
    r.greater_is_pass = greater_is_pass;
    r.pass = greater_is_pass ? value > threshold : value <= threshold;
    results.push_back(r);
  }

  SplitMix64 rng(const char* tag) const {
    uint64_t h = seed;
    for (const char* c = tag; *c; c++) h = h * 1099511628211ULL + static_cast<uint64_t>(*c);
    return SplitMix64(h);
  }
};

void metric_suite(Runner& R) {
  // gamma/n identity and analytic-vs-FD gradients (media layer)
  {
    auto rng = R.rng("media");
    double id_res = 0.0, fd_res = 0.0, z_res = 0.0;
    for (const auto& pr : all_families()) {
      for (int i = 0; i < 500; i++) {
        const PhasePoint p = random_point(rng, pr);
        const double g = pr.gamma(p.x), n = pr.refractive_index(p.x);
        id_res = std::max(id_res, std::abs(g * g + 1.0 - n * n) / (n * n));
        const Vec3 grad = pr.gamma_gradient(p.x);
        fd_res = std::max(fd_res, max_abs(grad - pr.gamma_gradient_fd(p.x)));
        if (pr.symmetry() == Symmetry::Cylindrical) z_res = std::max(z_res, std::abs(grad[2]));
      }
    }
    R.check("metric.gamma-n-identity", id_res, 1e-14);
    R.check("metric.gamma-gradient-fd", fd_res, 1e-6);
    R.check("metric.gamma-gradient-cyl-z", z_res, 0.0);
  }
  // inverse identity, 1000 points over the four families
  {
    auto rng = R.rng("inverse");
    double res = 0.0;
    for (const auto& pr : all_families())
      for (int i = 0; i < 250; i++) {
        const PhasePoint p = random_point(rng, pr);
        const Mat3 prod = mat_mul(fundamental_tensor(pr, p), inverse_fundamental_tensor(pr, p));
        res = std::max(res, max_abs(prod - identity3()));
      }
    R.check("metric.inverse-identity", res, 1e-12);
  }
  // closed-form g vs half the FD Hessian of the Lagrangian
  {
    auto rng = R.rng("hessian");
    double res = 0.0;
    for (const auto& pr : all_families())
      for (int i = 0; i < 125; i++) {
        const PhasePoint p = random_point(rng, pr);
        res = std::max(res, max_abs(hessian_oracle(pr, p) - fundamental_tensor(pr, p)));
      }
    R.check("metric.hessian-consistency", res, 1e-6);
  }
  // exact spectrum {sigma, sigma, tau}, all eigenvalues >= 1/2
  {
    auto rng = R.rng("spectrum");
    double res = 0.0;
    for (const auto& pr : all_families())
      for (int i = 0; i < 250; i++) {
        const PhasePoint p = random_point(rng, pr);
        const auto [sigma, tau] = sigma_tau(pr, p);
        const Mat3 g = fundamental_tensor(pr, p);
        res = std::max(res, std::max(0.5 - sigma, 0.5 - tau));
        const double ny = norm(p.y);
        if (ny > 1e-8) {
          const Vec3 yhat = (1.0 / ny) * p.y;
          res = std::max(res, max_abs(mat_vec(g, yhat) - tau * yhat));
          Vec3 u = std::abs(yhat[0]) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
          u = u - dot(u, yhat) * yhat;
          u = (1.0 / norm(u)) * u;
          res = std::max(res, max_abs(mat_vec(g, u) - sigma * u));
        }
      }
    R.check("metric.spectrum", res, 1e-12);
  }
  // O(3) equivariance of g for spherical profiles
  {
    auto rng = R.rng("o3");
    const auto pr = mirage_sph();
    double res = 0.0;
    for (int i = 0; i < 100; i++) {
      const PhasePoint p = random_point(rng, pr);
      const Mat3 q = rng.orthogonal();
      const PhasePoint pq{mat_vec(q, p.x), mat_vec(q, p.y)};
      const Mat3 lhs = fundamental_tensor(pr, pq);
      const Mat3 rhs = mat_mul(q, mat_mul(fundamental_tensor(pr, p), transpose(q)));
      res = std::max(res, max_abs(lhs - rhs));
    }
    R.check("metric.o3-equivariance", res, 1e-12);
  }
}

void connection_suite(Runner& R) {
  {
    auto rng = R.rng("uniform");
    const auto pr = uniform_profile();
    double gz = 0.0, lz = 0.0;
    for (int i = 0; i < 100; i++) {
      const PhasePoint p = random_point(rng, pr);
      gz = std::max(gz, max_abs(semispray(pr, p)));
      gz = std::max(gz, max_abs(nonlinear_connection(pr, p).n));
      lz = std::max(lz, max_abs(cartan_closed_form(pr, p).L));
    }
    R.check("connection.uniform-gn-zero", gz, 0.0);
    R.check("connection.uniform-l-zero", lz, 1e-14);
  }
  {
    auto rng = R.rng("nfd");
    double res = 0.0;
    for (const auto& pr : radial_families())
      for (int i = 0; i < 67; i++) {
        const PhasePoint p = random_point(rng, pr);
        res = std::max(res, max_abs(nonlinear_connection(pr, p).n - nonlinear_connection_fd(pr, p)));
      }
    R.check("connection.n-closed-vs-fd", res, 1e-6);
  }
  {
    auto rng = R.rng("cartan");
    double res_l = 0.0, res_c = 0.0, sym = 0.0;
    for (const auto& pr : radial_families())
      for (int i = 0; i < 67; i++) {
        const PhasePoint p = random_point(rng, pr);
        const CartanCoefficients cf = cartan_closed_form(pr, p);
        const CartanCoefficients gen = cartan_general(pr, p);
        res_l = std::max(res_l, max_abs(cf.L - gen.L));
        res_c = std::max(res_c, max_abs(cf.C - gen.C));
        for (int a = 0; a < 3; a++)
          for (int j = 0; j < 3; j++)
            for (int k = 0; k < 3; k++)
              sym = std::max(sym, std::max(std::abs(cf.L[a][j][k] - cf.L[a][k][j]),
                                           std::abs(cf.C[a][j][k] - cf.C[a][k][j])));
      }
    R.check("connection.cartan-l-dual-path", res_l, 1e-6);
    R.check("connection.cartan-c-dual-path", res_c, 1e-6);
    R.check("connection.cartan-symmetry", sym, 1e-12);
  }
  {
    auto rng = R.rng("o3g");
    const auto pr = mirage_sph();
    double res = 0.0;
    for (int i = 0; i < 100; i++) {
      const PhasePoint p = random_point(rng, pr);
      const Mat3 q = rng.orthogonal();
      const PhasePoint pq{mat_vec(q, p.x), mat_vec(q, p.y)};
      res = std::max(res, max_abs(semispray(pr, pq) - mat_vec(q, semispray(pr, p))));
    }
    R.check("connection.semispray-o3", res, 1e-12);
  }
}

void curvature_suite(Runner& R) {
  {
    auto rng = R.rng("gamma0");
    const auto pr = RefractiveProfile::uniform(1.0);  // gamma = 0
    double res = 0.0;
    for (int i = 0; i < 20; i++) {
      const PhasePoint p = random_point(rng, pr);
      const TorsionSet t = torsions(pr, p);
      const CurvatureSet c = curvatures(pr, p);
      res = std::max({res, max_abs(t.R), max_abs(t.P), max_abs(t.C), max_abs(c.R4),
                      max_abs(c.P4), max_abs(c.S4)});
    }
    R.check("curvature.gamma-zero-degeneration", res, 1e-10);
  }
  {
    auto rng = R.rng("uniformc");
    const auto pr = uniform_profile();
    double res = 0.0;
    for (int i = 0; i < 20; i++) {
      const PhasePoint p = random_point(rng, pr);
      const TorsionSet t = torsions(pr, p);
      const CurvatureSet c = curvatures(pr, p);
      res = std::max({res, max_abs(t.R), max_abs(t.P), max_abs(c.R4), max_abs(c.P4),
                      max_abs(h_covariant_C(pr, p))});
    }
    R.check("curvature.uniform-degeneration", res, 1e-8);
    // documented sample point for the nonvanishing vertical curvature
    const PhasePoint p{{0.5, 0.2, -0.3}, {1.0, 0.0, 0.0}};
    R.check("curvature.uniform-s4-nonzero", max_abs(curvatures(pr, p).S4), 1e-3, true);
  }
  {
    auto rng = R.rng("antisym");
    double res = 0.0;
    for (const auto& pr : radial_families())
      for (int i = 0; i < 10; i++) {
        const PhasePoint p = random_point(rng, pr);
        const TorsionSet t = torsions(pr, p);
        const CurvatureSet c = curvatures(pr, p);
        for (int a = 0; a < 3; a++)
          for (int j = 0; j < 3; j++)
            for (int k = 0; k < 3; k++) {
              res = std::max(res, std::abs(t.R[a][j][k] + t.R[a][k][j]));
              for (int l = 0; l < 3; l++) {
                res = std::max(res, std::abs(c.R4[a][j][k][l] + c.R4[a][j][l][k]));
                res = std::max(res, std::abs(c.S4[a][j][k][l] + c.S4[a][j][l][k]));
              }
            }
      }
    R.check("curvature.antisymmetries", res, 1e-8);
  }
  {
    auto rng = R.rng("metricity");
    double res = 0.0;
    for (const auto& pr : radial_families())
      for (int i = 0; i < 34; i++) {
        const PhasePoint p = random_point(rng, pr);
        const MetricityResiduals m = metricity_residuals(pr, p);
        res = std::max({res, max_abs(m.h), max_abs(m.v)});
      }
    R.check("curvature.metricity", res, 1e-5);
  }
  {
    auto rng = R.rng("halving");
    const auto pr = mirage_cyl();
    double tor_c = 0.0, cur_c = 0.0, met_c = 0.0, cov_c = 0.0;
    for (int i = 0; i < 5; i++) {
      const PhasePoint p = random_point(rng, pr);
      const TorsionSet t1 = torsions(pr, p, 1.0), t2 = torsions(pr, p, 0.5);
      tor_c = std::max({tor_c, max_abs(t1.R - t2.R), max_abs(t1.P - t2.P)});
      const CurvatureSet c1 = curvatures(pr, p, 1.0), c2 = curvatures(pr, p, 0.5);
      cur_c = std::max({cur_c, max_abs(c1.R4 - c2.R4), max_abs(c1.P4 - c2.P4),
                        max_abs(c1.S4 - c2.S4)});
      const MetricityResiduals m1 = metricity_residuals(pr, p, 1.0);
      const MetricityResiduals m2 = metricity_residuals(pr, p, 0.5);
      met_c = std::max({met_c, max_abs(m1.h - m2.h), max_abs(m1.v - m2.v)});
      cov_c = std::max(cov_c, max_abs(h_covariant_C(pr, p, 1.0) - h_covariant_C(pr, p, 0.5)));
    }
    R.check("curvature.step-halving-torsions", tor_c, 1e-5);
    R.check("curvature.step-halving-curvatures", cur_c, 1e-4);
    R.check("curvature.step-halving-metricity", met_c, 1e-4);
    R.check("curvature.step-halving-hcov", cov_c, 1e-5);
  }
}

void dynamics_suite(Runner& R) {
  {
    auto rng = R.rng("rhs2g");
    double res = 0.0;
    for (const auto& pr : all_families())
      for (int i = 0; i < 250; i++) {
        const PhasePoint p = random_point(rng, pr);
        const Vec3 a = motion_rhs(pr, p.x, p.y);
        res = std::max(res, max_abs(a + 2.0 * semispray(pr, p)));
      }
    R.check("dynamics.rhs-vs-semispray", res, 1e-12);
  }
  {
    const auto pr = uniform_profile();
    IntegratorConfig cfg;
    cfg.t1 = 10.0;
    cfg.sample_every = 1.0;
    const Vec3 x0{0.3, -0.2, 0.1}, v0{1.0, 2.0, 3.0};
    const Trajectory tr = integrate(pr, x0, v0, cfg);
    const Vec3 expect = x0 + 10.0 * v0;
    R.check("dynamics.uniform-straight-line", max_abs(tr.samples.back().x - expect), 1e-9);
  }
  {
    auto rng = R.rng("drift");
    double res = 0.0;
    for (const auto& pr : all_families())
      for (int i = 0; i < 20; i++) {
        const PhasePoint p = random_point(rng, pr);
        IntegratorConfig cfg;
        cfg.t1 = 20.0;
        cfg.sample_every = 0.5;
        const Trajectory tr = integrate(pr, p.x, p.y, cfg);
        // ring trajectories can be truncated at the axis; drift is measured
        // over whatever span was integrated
        const double e0 = tr.samples.front().energy;
        for (const auto& s : tr.samples)
          res = std::max(res, std::abs(s.energy - e0) / std::max(e0, 1e-30));
      }
    R.check("dynamics.energy-drift", res, 1e-8);
  }
  {
    auto rng = R.rng("reversal");
    const auto pr = mirage_sph();
    double res = 0.0;
    for (int i = 0; i < 5; i++) {
      const PhasePoint p = random_point(rng, pr);
      IntegratorConfig cfg;
      cfg.t1 = 5.0;
      cfg.sample_every = 5.0;
      const Trajectory fwd = integrate(pr, p.x, p.y, cfg);
      const auto& end = fwd.samples.back();
      const Trajectory back = integrate(pr, end.x, -end.v, cfg);
      res = std::max(res, std::max(max_abs(back.samples.back().x - p.x),
                                   max_abs(back.samples.back().v - (-p.y))));
    }
    R.check("dynamics.time-reversal", res, 1e-6);
  }
  {
    auto rng = R.rng("rot");
    const auto pr = mirage_sph();
    double res = 0.0;
    for (int i = 0; i < 5; i++) {
      const PhasePoint p = random_point(rng, pr);
      const Mat3 q = rng.orthogonal();
      IntegratorConfig cfg;
      cfg.t1 = 5.0;
      cfg.sample_every = 0.5;
      const Trajectory a = integrate(pr, p.x, p.y, cfg);
      const Trajectory b = integrate(pr, mat_vec(q, p.x), mat_vec(q, p.y), cfg);
      const size_t n = std::min(a.samples.size(), b.samples.size());
      for (size_t k = 0; k < n; k++)
        res = std::max(res, max_abs(mat_vec(q, a.samples[k].x) - b.samples[k].x));
    }
    R.check("dynamics.rotation-equivariance", res, 1e-8);
  }
  {
    const auto pr = mirage_sph();
    IntegratorConfig cfg;
    cfg.t1 = 10.0;
    cfg.sample_every = 0.1;
    const Trajectory tr = integrate(pr, {0.0, 0.0, 0.8}, {0.0, 0.0, 0.9}, cfg);
    double res = 0.0;
    for (const auto& s : tr.samples)
      res = std::max({res, std::abs(s.x[0]), std::abs(s.x[1])});
    R.check("dynamics.axis-confinement", res, 1e-10);
  }
}

void closedform_suite(Runner& R) {
  const auto cyl = mirage_cyl();
  const auto sph = mirage_sph();
  const auto ring = ring_cyl();

  // helix families across a radius grid
  {
    double res = 0.0, el = 0.0, bis = 0.0;
    bool pairs_ok = true, predicate_ok = true;
    for (int i = 0; i <= 22; i++) {
      const double rho = 0.5 + 0.25 * i;
      const auto fams = helix_omegas(cyl, rho);
      predicate_ok = predicate_ok && (helix_interval_predicate(cyl, rho) == !fams.empty());
      double max_w = 0.0;
      for (const auto& f : fams) {
        res = std::max(res, f.residual);
        max_w = std::max(max_w, std::abs(f.omega0));
        bool mate = false;
        for (const auto& g : fams)
          if (g.sign_sqrt == f.sign_sqrt && g.omega0 == -f.omega0) mate = true;
        pairs_ok = pairs_ok && mate;
        const Curve c = analytic_curve(f);
        for (int k = 0; k < 20; k++)
          el = std::max(el, max_abs(el_residual(cyl, c, 0.3 * k)));
      }
      if (!fams.empty()) {
        // independent confirmation: bisection on the scalar equation in omega
        auto eq = [&](double w) { return helix_equation_residual(cyl, rho, w); };
        const auto roots = find_roots(eq, 1e-6, 2.0 * max_w + 1.0 / rho, 4096);
        for (const auto& f : fams) {
          if (f.omega0 <= 0.0) continue;
          double best = 1e300;
          for (double r : roots) best = std::min(best, std::abs(r - f.omega0));
          bis = std::max(bis, best);
        }
      }
    }
    R.check("closedform.helix-residual", res, 1e-10);
    R.check("closedform.helix-el-residual", el, 1e-8);
    R.check("closedform.helix-bisection-agreement", bis, 1e-10);
    R.check("closedform.helix-pairs", pairs_ok ? 0.0 : 1.0, 0.0);
    R.check("closedform.helix-predicate-agreement", predicate_ok ? 0.0 : 1.0, 0.0);
  }
  // circle families: defining residuals, motion residuals, root coincidence
  {
    double res = 0.0, el = 0.0;
    const auto c_cyl = circle_radii(cyl, 0.1, 10.0);
    const auto c_sph = circle_radii(sph, 0.1, 10.0);
    R.check("closedform.circle-found", c_cyl.empty() || c_sph.empty() ? 0.0 : 1.0, 0.0, true);
    for (const auto& fams : {c_cyl, c_sph})
      for (const auto& f : fams) {
        res = std::max(res, f.residual);
        const Curve c = analytic_curve(f);
        for (int k = 0; k < 20; k++)
          el = std::max(el, max_abs(el_residual(f.symmetry == Symmetry::Spherical ? sph : cyl, c,
                                                 0.33 * k)));
      }
    double coincide = 0.0;
    if (c_cyl.size() == c_sph.size())
      for (size_t i = 0; i < c_cyl.size(); i++)
        coincide = std::max(coincide, std::abs(c_cyl[i].radius - c_sph[i].radius));
    else
      coincide = 1.0;
    R.check("closedform.circle-residual", res, 1e-10);
    R.check("closedform.circle-el-residual", el, 1e-8);
    R.check("closedform.circle-root-coincidence", coincide, 1e-12);
  }
  // generator lines
  {
    const auto gens = generator_radii(ring, 0.1, 10.0);
    double rho_err = 1.0, el = 1.0;
    if (!gens.empty()) {
      rho_err = std::abs(gens.front().rho0 - 2.0);
      const Curve c = analytic_curve(gens.front());
      el = 0.0;
      for (int k = 0; k < 20; k++) el = std::max(el, max_abs(el_residual(ring, c, 0.5 * k)));
    }
    R.check("closedform.generator-ring-radius", rho_err, 1e-10);
    R.check("closedform.generator-el-residual", el, 1e-10);
    R.check("closedform.generator-mirage-empty",
            generator_radii(cyl, 0.1, 10.0).empty() ? 0.0 : 1.0, 0.0);
  }
  // the latitude-circle candidate at an f' root fails the motion equations
  // by exactly its centripetal demand r0 sin(theta0)
  {
    const auto bump = RefractiveProfile::spherical_radial(
        [](double s) { return 1.0 + std::exp(-(s - 2.0) * (s - 2.0)); },
        [](double s) { return -2.0 * (s - 2.0) * std::exp(-(s - 2.0) * (s - 2.0)); });
    bool emitted = false;
    for (const auto& f : sphere_circle_families(bump, 0.1, 10.0))
      emitted = emitted || f.kind == CircleKind::HorizontalOnAxis;
    const CircleFamily cand = latitude_circle_candidate(bump, 2.0, M_PI / 3.0);
    const double res = max_abs(el_residual(bump, analytic_curve(cand), 0.7));
    R.check("closedform.latitude-candidate-rejected",
            emitted ? 1.0 : std::abs(res - 2.0 * std::sin(M_PI / 3.0)), 1e-9);
  }
  // incompatibility: F is real inside the window but solves nothing
  {
    const double s = 3.5;
    const auto F = incompatibility_probe(cyl, s);
    R.check("closedform.incompat-window", F ? 1.0 : 0.0, 0.0, true);
    if (F) {
      const double h = 1e-5;
      const auto Fp = incompatibility_probe(cyl, s + h);
      const auto Fm = incompatibility_probe(cyl, s - h);
      const double dF = (Fp && Fm) ? (*Fp - *Fm) / (2.0 * h) : 0.0;
      const Curve c = [s, F, dF](double) -> CurveState {
        return {{s, 0.0, 0.0}, {*F, s, 0.0}, {dF * *F - s, 2.0 * *F, 0.0}};
      };
      R.check("closedform.incompat-el-residual", max_abs(el_residual(cyl, c, 0.0)), 1e-4, true);
    } else {
      R.check("closedform.incompat-el-residual", 0.0, 1e-4, true);
    }
  }
  // analytic families track the integrator
  {
    double dev = 0.0;
    const auto fams = helix_omegas(cyl, 4.0);
    if (!fams.empty()) {
      const auto& f = fams.front();
      const double period = 2.0 * M_PI / std::abs(f.omega0);
      const Trajectory ana = make_trajectory(cyl, f, 0.0, period, period / 64.0);
      IntegratorConfig cfg;
      cfg.t1 = period;
      cfg.sample_every = period / 64.0;
      const CurveState s0 = analytic_curve(f)(0.0);
      const Trajectory num = integrate(cyl, s0.x, s0.v, cfg);
      const size_t n = std::min(ana.samples.size(), num.samples.size());
      for (size_t k = 0; k < n; k++) dev = std::max(dev, max_abs(ana.samples[k].x - num.samples[k].x));
    } else {
      dev = 1.0;
    }
    R.check("closedform.helix-vs-integrator", dev, 1e-6);

    const auto circles = circle_radii(sph, 0.1, 10.0);
    double closure = 1.0;
    if (!circles.empty()) {
      const double r0 = circles.front().radius;
      IntegratorConfig cfg;
      cfg.t1 = 2.0 * M_PI;
      cfg.sample_every = 2.0 * M_PI;
      const Trajectory tr = integrate(sph, {r0, 0.0, 0.0}, {0.0, r0, 0.0}, cfg);
      closure = max_abs(tr.samples.back().x - Vec3{r0, 0.0, 0.0});
    }
    R.check("closedform.circle-orbit-closure", closure, 1e-6);
  }
}

}  // namespace

std::vector<CheckResult> run_verify(VerifySuite suite, uint64_t seed) {
  Runner R{seed, {}};
  const bool all = suite == VerifySuite::All;
  if (all || suite == VerifySuite::Metric) metric_suite(R);
  if (all || suite == VerifySuite::Connection) connection_suite(R);
  if (all || suite == VerifySuite::Curvature) curvature_suite(R);
  if (all || suite == VerifySuite::Dynamics) dynamics_suite(R);
  if (all || suite == VerifySuite::Closedform) closedform_suite(R);
  std::sort(R.results.begin(), R.results.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  return R.results;
}

void print_report(std::ostream& os, const std::vector<CheckResult>& results) {
  char buf[160];
  for (const auto& r : results) {
    std::snprintf(buf, sizeof buf, "[%s] %-42s %c %11.4e  (threshold %s %.4e)",
                  r.pass ? "PASS" : "FAIL", r.name.c_str(), ' ', r.value,
                  r.greater_is_pass ? ">" : "<=", r.threshold);
    os << buf << "\n";
  }
}

}  // namespace aniso
