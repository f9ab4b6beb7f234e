#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "aniso/connection.hpp"
#include "aniso/dynamics.hpp"
#include "aniso/metric.hpp"
#include "aniso/rng.hpp"

using namespace aniso;

namespace {
RefractiveProfile mirage_sph() {
  return RefractiveProfile::gaussian_mirage(1.0, 2.5, Symmetry::Spherical);
}
RefractiveProfile mirage_cyl() {
  return RefractiveProfile::gaussian_mirage(1.0, 2.5, Symmetry::Cylindrical);
}

PhasePoint off_axis_point(SplitMix64& rng) {
  const double s = rng.uniform(0.4, 4.0), phi = rng.uniform(0.0, 2 * M_PI);
  return {{s * std::cos(phi), s * std::sin(phi), rng.uniform(-2.0, 2.0)}, rng.box(1.3)};
}
}  // namespace

TEST_CASE("uniform medium: G and N vanish identically") {
  SplitMix64 rng(3);
  const auto pr = RefractiveProfile::uniform(1.8);
  for (int i = 0; i < 50; i++) {
    const PhasePoint p{rng.box(3.0), rng.box(2.0)};
    CHECK(max_abs(semispray(pr, p)) == 0.0);
    CHECK(max_abs(nonlinear_connection(pr, p).n) == 0.0);
    CHECK(max_abs(nonlinear_connection_fd(pr, p)) < 1e-14);
  }
}

TEST_CASE("rest direction: G and N vanish") {
  const auto pr = mirage_sph();
  const PhasePoint p{{1.0, 0.5, -0.2}, {0, 0, 0}};
  CHECK(max_abs(semispray(pr, p)) == 0.0);
  CHECK(max_abs(nonlinear_connection(pr, p).n) == 0.0);
}

TEST_CASE("semispray equals -1/2 of the motion right-hand side") {
  SplitMix64 rng(13);
  const auto pr = mirage_sph();
  double worst = 0.0;
  for (int i = 0; i < 500; i++) {
    const PhasePoint p{rng.box(3.0), rng.box(1.5)};
    const Vec3 a = motion_rhs(pr, p.x, p.y);
    worst = std::max(worst, max_abs(semispray(pr, p) - (-0.5) * a));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("closed-form N matches the dG/dy oracle") {
  const auto pr = mirage_cyl();
  const PhasePoint p{{3.0, 0.0, 0.0}, {0.4, 0.3, 0.2}};
  CHECK(max_abs(nonlinear_connection(pr, p).n - nonlinear_connection_fd(pr, p)) < 1e-6);

  SplitMix64 rng(19);
  double worst = 0.0;
  for (const auto& profile : {mirage_sph(), mirage_cyl()})
    for (int i = 0; i < 100; i++) {
      const PhasePoint q = off_axis_point(rng);
      worst = std::max(worst,
                       max_abs(nonlinear_connection(profile, q).n -
                               nonlinear_connection_fd(profile, q)));
    }
  CHECK(worst < 1e-6);
}

TEST_CASE("lowered contraction convention") {
  const auto pr = mirage_cyl();
  const PhasePoint p{{2.0, 1.0, 0.3}, {0.7, -0.4, 0.5}};
  const NonlinearConnection nc = nonlinear_connection(pr, p);
  // N_ij = N_i^r delta_rj picks the transposed entry
  for (int i = 0; i < 3; i++)
    for (int j = 0; j < 3; j++) CHECK(nc.lower(i, j) == nc.n[j][i]);
  for (int i = 0; i < 3; i++) {
    double a = 0.0, b = 0.0;
    for (int r = 0; r < 3; r++) {
      a += nc.lower(i, r) * p.y[r];
      b += nc.lower(r, i) * p.y[r];
    }
    CHECK(nc.n_i0[i] == doctest::Approx(a).epsilon(1e-15));
    CHECK(nc.n_0j[i] == doctest::Approx(b).epsilon(1e-15));
  }
  CHECK(nc.n_00 == doctest::Approx(dot(nc.n_i0, p.y)).epsilon(1e-15));
}

TEST_CASE("delta derivative of a constant field vanishes") {
  const auto pr = mirage_sph();
  const PhasePoint p{{1.0, 2.0, 0.5}, {0.3, 0.2, 0.1}};
  auto constant = [](const PhasePoint&) { return 7.25; };
  for (int k = 0; k < 3; k++) CHECK(delta_x(constant, pr, p, k) == 0.0);
}

TEST_CASE("uniform medium: delta reduces to the plain x derivative") {
  const auto pr = RefractiveProfile::uniform(1.5);
  const PhasePoint p{{0.4, -0.2, 1.0}, {0.6, 0.1, -0.3}};
  auto field = [](const PhasePoint& q) { return q.x[0] * q.x[0] + 2.0 * q.x[1]; };
  CHECK(delta_x(field, pr, p, 0) == doctest::Approx(2.0 * p.x[0]).epsilon(1e-9));
  CHECK(delta_x(field, pr, p, 1) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(std::abs(delta_x(field, pr, p, 2)) < 1e-9);
}

TEST_CASE("cartan coefficients degenerate as gamma vanishes or is constant") {
  SplitMix64 rng(37);
  const auto zero = RefractiveProfile::uniform(1.0);
  const auto constant = RefractiveProfile::uniform(std::sqrt(2.0));
  for (int i = 0; i < 20; i++) {
    const PhasePoint p{rng.box(2.0), rng.box(1.5)};
    const CartanCoefficients c0 = cartan_closed_form(zero, p);
    CHECK(max_abs(c0.L) == 0.0);
    CHECK(max_abs(c0.C) == 0.0);
    const CartanCoefficients c1 = cartan_closed_form(constant, p);
    CHECK(max_abs(c1.L) < 1e-14);
  }
  // constant gamma = 1 at y = e1: C^1_11 = 6/7 (sigma = 3/2, tau = 7/2)
  const CartanCoefficients c = cartan_closed_form(constant, {{0.3, 0.1, 0.0}, {1, 0, 0}});
  CHECK(c.C[0][0][0] == doctest::Approx(6.0 / 7.0).epsilon(1e-14));
  CHECK(max_abs(c.C) > 0.1);
}

TEST_CASE("closed-form Cartan coefficients match the general formulas") {
  SplitMix64 rng(43);
  double worst_l = 0.0, worst_c = 0.0;
  for (const auto& profile : {mirage_sph(), mirage_cyl()})
    for (int i = 0; i < 100; i++) {
      const PhasePoint p = off_axis_point(rng);
      const CartanCoefficients cf = cartan_closed_form(profile, p);
      const CartanCoefficients gen = cartan_general(profile, p);
      worst_l = std::max(worst_l, max_abs(cf.L - gen.L));
      worst_c = std::max(worst_c, max_abs(cf.C - gen.C));
    }
  CHECK(worst_l < 1e-6);
  CHECK(worst_c < 1e-6);
}

TEST_CASE("uniform medium: general-formula L vanishes") {
  const auto pr = RefractiveProfile::uniform(std::sqrt(2.0));
  const PhasePoint p{{0.5, -0.3, 0.8}, {0.4, 0.7, -0.2}};
  CHECK(max_abs(cartan_general(pr, p).L) < 1e-8);
}

TEST_CASE("Cartan coefficients are symmetric in the lower indices") {
  SplitMix64 rng(47);
  const auto pr = mirage_sph();
  double worst = 0.0;
  for (int i = 0; i < 100; i++) {
    const PhasePoint p{rng.box(3.0), rng.box(1.5)};
    const CartanCoefficients c = cartan_closed_form(pr, p);
    for (int a = 0; a < 3; a++)
      for (int j = 0; j < 3; j++)
        for (int k = 0; k < 3; k++)
          worst = std::max(worst, std::max(std::abs(c.L[a][j][k] - c.L[a][k][j]),
                                           std::abs(c.C[a][j][k] - c.C[a][k][j])));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("O(3) equivariance of the semispray") {
  SplitMix64 rng(53);
  const auto pr = mirage_sph();
  double worst = 0.0;
  for (int i = 0; i < 100; i++) {
    const PhasePoint p{rng.box(3.0), rng.box(1.5)};
    const Mat3 Q = rng.orthogonal();
    worst = std::max(worst, max_abs(semispray(pr, {mat_vec(Q, p.x), mat_vec(Q, p.y)}) -
                                    mat_vec(Q, semispray(pr, p))));
  }
  CHECK(worst < 1e-12);
}
