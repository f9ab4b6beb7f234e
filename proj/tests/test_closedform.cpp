#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "aniso/closedform.hpp"
#include "aniso/rootfind.hpp"

using namespace aniso;

namespace {
RefractiveProfile mirage_cyl() {
  return RefractiveProfile::gaussian_mirage(1.0, 2.5, Symmetry::Cylindrical);
}
RefractiveProfile mirage_sph() {
  return RefractiveProfile::gaussian_mirage(1.0, 2.5, Symmetry::Spherical);
}
RefractiveProfile ring() { return RefractiveProfile::gaussian_ring(1.0, 1.0, 2.0, 1.0); }
}  // namespace

TEST_CASE("helix branches at rho = 4 for the cylindrical mirage") {
  const auto fams = helix_omegas(mirage_cyl(), 4.0);
  REQUIRE(fams.size() >= 2);
  for (const auto& f : fams) {
    CHECK(f.residual < 1e-10);
    CHECK(f.v2 > 1.0);
    CHECK(std::abs(helix_equation_residual(mirage_cyl(), 4.0, f.omega0)) < 1e-10);
    // +- pairs within the same discriminant branch
    bool mate = false;
    for (const auto& g : fams)
      if (g.sign_sqrt == f.sign_sqrt && g.omega0 == -f.omega0) mate = true;
    CHECK(mate);
  }
}

TEST_CASE("helix branch values against an independent bisection") {
  const auto pr = mirage_cyl();
  const double rho = 4.0;
  const auto fams = helix_omegas(pr, rho);
  REQUIRE(!fams.empty());
  double cap = 0.0;
  for (const auto& f : fams) cap = std::max(cap, std::abs(f.omega0));
  auto eq = [&](double w) { return helix_equation_residual(pr, rho, w); };
  const auto roots = find_roots(eq, 1e-6, 2.0 * cap + 0.25, 4096);
  for (const auto& f : fams) {
    if (f.omega0 <= 0.0) continue;
    double best = 1e300;
    for (double r : roots) best = std::min(best, std::abs(r - f.omega0));
    CHECK(best < 1e-10);
  }
}

TEST_CASE("no helix where f' vanishes") {
  CHECK(helix_omegas(ring(), 2.0).empty());
}

TEST_CASE("interval predicate agrees with branch existence") {
  const auto pr = mirage_cyl();
  for (int i = 0; i <= 40; i++) {
    const double rho = 0.3 + 0.15 * i;
    CAPTURE(rho);
    CHECK(helix_interval_predicate(pr, rho) == !helix_omegas(pr, rho).empty());
  }
}

TEST_CASE("helix solvers reject non-cylindrical profiles") {
  CHECK_THROWS_AS(helix_omegas(mirage_sph(), 4.0), std::invalid_argument);
  CHECK_THROWS_AS(helix_omegas(RefractiveProfile::uniform(1.5), 4.0), std::invalid_argument);
}

TEST_CASE("circle radii for the mirage profile") {
  const auto fams = circle_radii(mirage_cyl(), 0.1, 10.0);
  REQUIRE(!fams.empty());
  for (const auto& f : fams) {
    CHECK(f.residual < 1e-10);
    CHECK(f.kind == CircleKind::HorizontalOnAxis);
    CHECK(f.radius > 0.1);
    CHECK(f.radius < 10.0);
  }
}

TEST_CASE("no circle roots where f f' >= 0") {
  // ring profile left of the peak: f' > 0, so h = 1 + 2f^2s^2 + ff's^3 > 1
  CHECK(circle_radii(ring(), 0.1, 1.9).empty());
}

TEST_CASE("cylindrical and spherical circle conditions share the same roots") {
  const auto cyl = circle_radii(mirage_cyl(), 0.1, 10.0);
  const auto sph = circle_radii(mirage_sph(), 0.1, 10.0);
  REQUIRE(cyl.size() == sph.size());
  for (size_t i = 0; i < cyl.size(); i++)
    CHECK(std::abs(cyl[i].radius - sph[i].radius) < 1e-12);
  for (const auto& f : sph) CHECK(f.kind == CircleKind::OriginEquatorial);
}

TEST_CASE("generator lines of the ring profile") {
  const auto gens = generator_radii(ring(), 0.1, 10.0);
  REQUIRE(gens.size() == 1);
  CHECK(std::abs(gens.front().rho0 - 2.0) < 1e-10);
  CHECK(gens.front().kind == LineKind::CylinderGenerator);
  const Curve c = analytic_curve(gens.front());
  for (int k = 0; k < 50; k++) CHECK(max_abs(el_residual(ring(), c, 0.2 * k)) < 1e-10);
}

TEST_CASE("mirage profiles have no generators") {
  CHECK(generator_radii(mirage_cyl(), 0.1, 10.0).empty());
}

TEST_CASE("sphere circle families") {
  const auto fams = sphere_circle_families(mirage_sph(), 0.1, 10.0);
  REQUIRE(!fams.empty());
  bool have_equatorial = false, have_vertical = false;
  for (const auto& f : fams) {
    if (f.kind == CircleKind::OriginEquatorial) {
      have_equatorial = true;
      const Curve c = analytic_curve(f);
      for (int k = 0; k < 50; k++) CHECK(max_abs(el_residual(mirage_sph(), c, 0.13 * k)) < 1e-10);
    }
    if (f.kind == CircleKind::VerticalThroughOrigin) have_vertical = true;
  }
  CHECK(have_equatorial);
  CHECK(have_vertical);
  // mirage f' < 0 for r > 0: no latitude families
  for (const auto& f : fams) CHECK(f.kind != CircleKind::HorizontalOnAxis);
}

TEST_CASE("vertical circle with phi0 = pi/2 lies in the plane x1 = 0") {
  auto fams = sphere_circle_families(mirage_sph(), 0.1, 10.0);
  for (auto& f : fams) {
    if (f.kind != CircleKind::VerticalThroughOrigin) continue;
    f.plane_param = M_PI / 2.0;
    const Curve c = analytic_curve(f);
    for (int k = 0; k < 30; k++) {
      const CurveState s = c(0.21 * k);
      // the paper's plane equation: sin(phi0) x1 - cos(phi0) x2 = 0
      CHECK(std::abs(std::sin(f.plane_param) * s.x[0] - std::cos(f.plane_param) * s.x[1]) < 1e-12);
      CHECK(std::abs(norm(s.x) - f.radius) < 1e-12 * std::max(1.0, f.radius));
      CHECK(max_abs(el_residual(mirage_sph(), c, 0.21 * k)) < 1e-10);
    }
  }
}

TEST_CASE("latitude-circle candidates at f' roots are never solutions") {
  // spherical profile with an interior f' root at r = 2
  const auto bump = RefractiveProfile::spherical_radial(
      [](double s) { return 1.0 + std::exp(-(s - 2.0) * (s - 2.0)); },
      [](double s) { return -2.0 * (s - 2.0) * std::exp(-(s - 2.0) * (s - 2.0)); });
  const auto fams = sphere_circle_families(bump, 0.1, 10.0);
  for (const auto& f : fams) CHECK(f.kind != CircleKind::HorizontalOnAxis);

  // the would-be circle needs centripetal acceleration r0 sin(theta0), but the
  // gradient force vanishes exactly where f' = 0
  const double theta0 = M_PI / 3.0;
  const CircleFamily cand = latitude_circle_candidate(bump, 2.0, theta0);
  CHECK(cand.residual < 1e-12);  // it does sit on an f' root
  const Curve c = analytic_curve(cand);
  double res = 0.0;
  for (int k = 0; k < 30; k++) res = std::max(res, max_abs(el_residual(bump, c, 0.19 * k)));
  CHECK(res == doctest::Approx(2.0 * std::sin(theta0)).epsilon(1e-9));
}

TEST_CASE("incompatibility probe: window, value, and non-solution") {
  const auto pr = mirage_cyl();
  // outside the window (2f + s f' > 0 near the axis)
  CHECK(!incompatibility_probe(pr, 1.0).has_value());
  // inside the window at s = 3.5
  const auto F = incompatibility_probe(pr, 3.5);
  REQUIRE(F.has_value());
  CHECK(*F > 0.0);
  CHECK(std::isfinite(*F));

  // a curve with dr/dt = F(r) fails the full equations of motion
  const double s = 3.5, h = 1e-5;
  const auto Fp = incompatibility_probe(pr, s + h);
  const auto Fm = incompatibility_probe(pr, s - h);
  REQUIRE(Fp.has_value());
  REQUIRE(Fm.has_value());
  const double dF = (*Fp - *Fm) / (2.0 * h);
  const Curve c = [s, F, dF](double) -> CurveState {
    return {{s, 0.0, 0.0}, {*F, s, 0.0}, {dF * *F - s, 2.0 * *F, 0.0}};
  };
  CHECK(max_abs(el_residual(pr, c, 0.0)) > 1e-4);
}

TEST_CASE("helix trajectory construction is exact") {
  const auto pr = mirage_cyl();
  const auto fams = helix_omegas(pr, 4.0);
  REQUIRE(!fams.empty());
  const auto& f = fams.front();
  const double period = 2.0 * M_PI / std::abs(f.omega0);
  const Trajectory tr = make_trajectory(pr, f, 0.0, period, period / 32.0);
  for (const auto& s : tr.samples) {
    CHECK(s.x[2] == s.t);  // x3(t) = t exactly
    CHECK(std::abs(s.x[0] * s.x[0] + s.x[1] * s.x[1] - f.rho0 * f.rho0) < 1e-14 * f.rho0 * f.rho0);
  }
  CHECK(tr.samples.front().t == 0.0);
  CHECK(tr.samples.back().t == period);
}

TEST_CASE("analytic families track the integrator") {
  const auto pr = mirage_cyl();
  const auto fams = helix_omegas(pr, 4.0);
  REQUIRE(!fams.empty());
  const auto& f = fams.front();
  const double period = 2.0 * M_PI / std::abs(f.omega0);
  const Trajectory ana = make_trajectory(pr, f, 0.0, period, period / 64.0);
  IntegratorConfig cfg;
  cfg.t1 = period;
  cfg.sample_every = period / 64.0;
  const CurveState s0 = analytic_curve(f)(0.0);
  const Trajectory num = integrate(pr, s0.x, s0.v, cfg);
  REQUIRE(!num.truncated());
  REQUIRE(ana.samples.size() == num.samples.size());
  double dev = 0.0;
  for (size_t k = 0; k < ana.samples.size(); k++)
    dev = std::max(dev, max_abs(ana.samples[k].x - num.samples[k].x));
  CHECK(dev < 1e-6);
}

TEST_CASE("z-axis segment trajectories stay on the axis") {
  const auto pr = mirage_sph();
  LineFamily seg;
  seg.kind = LineKind::ZAxisSegment;
  seg.r0 = 0.8;
  seg.v0 = 0.9;
  const Trajectory tr = make_trajectory(pr, seg, 0.0, 10.0, 0.1);
  REQUIRE(!tr.truncated());
  for (const auto& s : tr.samples) {
    CHECK(std::abs(s.x[0]) < 1e-10);
    CHECK(std::abs(s.x[1]) < 1e-10);
  }
  CHECK_THROWS_AS(analytic_curve(seg), std::invalid_argument);
}

TEST_CASE("solver input validation") {
  CHECK_THROWS_AS(circle_radii(RefractiveProfile::uniform(1.2), 0.1, 10.0), std::invalid_argument);
  CHECK_THROWS_AS(circle_radii(mirage_cyl(), -1.0, 10.0), std::invalid_argument);
  CHECK_THROWS_AS(generator_radii(mirage_sph(), 0.1, 10.0), std::invalid_argument);
  CHECK_THROWS_AS(sphere_circle_families(mirage_cyl(), 0.1, 10.0), std::invalid_argument);
  CHECK_THROWS_AS(helix_omegas(mirage_cyl(), -2.0), std::invalid_argument);
}
