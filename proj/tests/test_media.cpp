#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "aniso/media.hpp"
#include "aniso/rng.hpp"

using namespace aniso;

TEST_CASE("uniform gamma values") {
  const auto p1 = RefractiveProfile::uniform(1.0);
  CHECK(p1.gamma({0.3, -2.0, 5.0}) == 0.0);
  const auto p2 = RefractiveProfile::uniform(std::sqrt(2.0));
  CHECK(p2.gamma({1.0, 2.0, 3.0}) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(max_abs(p2.gamma_gradient({1.0, 2.0, 3.0})) == 0.0);
}

TEST_CASE("mirage gamma at the center") {
  const auto p = RefractiveProfile::gaussian_mirage(0.5, 2.0, Symmetry::Spherical);
  // n(0) = 1.5, gamma = sqrt(n^2-1) = sqrt(1.25)
  CHECK(p.gamma({0.0, 0.0, 0.0}) == doctest::Approx(std::sqrt(1.25)).epsilon(1e-15));
  CHECK(max_abs(p.gamma_gradient({0.0, 0.0, 0.0})) == 0.0);  // f'(0) = 0
}

TEST_CASE("gamma gradient matches the finite-difference oracle") {
  const auto p = RefractiveProfile::gaussian_mirage(1.0, 2.5, Symmetry::Cylindrical);
  const Vec3 x{3.0, 0.0, 0.0};
  const Vec3 g = p.gamma_gradient(x);
  const Vec3 fd = p.gamma_gradient_fd(x, 1e-5 * std::max(1.0, norm(x)));
  CHECK(max_abs(g - fd) < 1e-6);
}

TEST_CASE("gradient oracle over random points, all builtin variants") {
  SplitMix64 rng(7);
  const RefractiveProfile profiles[] = {
      RefractiveProfile::uniform(1.7),
      RefractiveProfile::gaussian_mirage(1.0, 2.5, Symmetry::Spherical),
      RefractiveProfile::gaussian_mirage(0.5, 2.0, Symmetry::Cylindrical),
      RefractiveProfile::gaussian_ring(1.0, 1.0, 2.0, 1.0),
  };
  for (const auto& p : profiles) {
    double worst = 0.0;
    for (int i = 0; i < 500; i++) {
      Vec3 x;
      if (p.symmetry() == Symmetry::None) {
        x = rng.box(3.0);
      } else {
        const double s = rng.uniform(0.4, 4.0), phi = rng.uniform(0.0, 2 * M_PI);
        x = {s * std::cos(phi), s * std::sin(phi), rng.uniform(-2.0, 2.0)};
        if (p.symmetry() == Symmetry::Spherical) x = s * rng.unit_vector();
      }
      worst = std::max(worst, max_abs(p.gamma_gradient(x) - p.gamma_gradient_fd(x)));
    }
    CHECK(worst < 1e-6);
  }
}

TEST_CASE("cylindrical gradients have exactly zero z component") {
  SplitMix64 rng(11);
  const auto p = RefractiveProfile::gaussian_ring(1.0, 0.5, 2.0, 1.0);
  for (int i = 0; i < 100; i++) {
    const double s = rng.uniform(0.2, 5.0), phi = rng.uniform(0.0, 2 * M_PI);
    const Vec3 x{s * std::cos(phi), s * std::sin(phi), rng.uniform(-3.0, 3.0)};
    CHECK(p.gamma_gradient(x)[2] == 0.0);
  }
}

TEST_CASE("uniform FD gradient is zero to machine precision") {
  const auto p = RefractiveProfile::uniform(1.3);
  CHECK(max_abs(p.gamma_gradient_fd({0.2, 0.4, -1.0}, 1e-4)) < 1e-13);
}

TEST_CASE("ring peak: f'(center) = 0") {
  const auto p = RefractiveProfile::gaussian_ring(1.0, 1.0, 2.0, 1.0);
  const auto [f, fp] = p.radial_f(2.0);
  CHECK(f == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(fp == 0.0);
  // FD gradient at x = (2,0,0): radial component vanishes at the peak
  CHECK(std::abs(p.gamma_gradient_fd({2.0, 0.0, 0.0})[0]) < 1e-8);
}

TEST_CASE("mirage radial function decays") {
  const auto p = RefractiveProfile::gaussian_mirage(0.5, 2.0, Symmetry::Spherical);
  const auto [f_far, fp_far] = p.radial_f(20.0);
  CHECK(f_far >= 0.0);
  CHECK(f_far < 1e-10);
  CHECK(fp_far <= 0.0);
  const auto p2 = RefractiveProfile::gaussian_mirage(1.0, 2.5, Symmetry::Cylindrical);
  CHECK(p2.radial_f(2.5).second < 0.0);
}

TEST_CASE("radial_f rejects uniform profiles") {
  const auto p = RefractiveProfile::uniform(1.5);
  CHECK_THROWS_AS(p.radial_f(1.0), std::invalid_argument);
}

TEST_CASE("gamma^2 + 1 = n^2 everywhere") {
  SplitMix64 rng(23);
  const RefractiveProfile profiles[] = {
      RefractiveProfile::uniform(2.0),
      RefractiveProfile::gaussian_mirage(1.0, 2.5, Symmetry::Spherical),
      RefractiveProfile::gaussian_ring(1.0, -0.5, 2.0, 1.0),
  };
  for (const auto& p : profiles)
    for (int i = 0; i < 200; i++) {
      Vec3 x = rng.box(4.0);
      if (p.symmetry() == Symmetry::Cylindrical && std::hypot(x[0], x[1]) < 0.1) x[0] += 0.5;
      const double g = p.gamma(x), n = p.refractive_index(x);
      CHECK(std::abs(g * g + 1.0 - n * n) / (n * n) < 1e-14);
      CHECK(n >= 1.0);
      CHECK(g >= 0.0);
    }
}

TEST_CASE("user radial profile without axis limit errors at the axis") {
  const auto p = RefractiveProfile::cylindrical_radial(
      [](double s) { return 1.0 / s; }, [](double s) { return -1.0 / (s * s); });
  CHECK_THROWS_AS(p.gamma({0.0, 0.0, 1.0}), std::domain_error);
  CHECK(p.gamma({1.0, 0.0, 0.0}) == doctest::Approx(1.0));
  // with a declared limit the axis value is served
  const auto q = RefractiveProfile::spherical_radial(
      [](double s) { return 1.0 + s * s; }, [](double s) { return 2.0 * s; },
      std::pair{1.0, 0.0});
  CHECK(q.gamma({0.0, 0.0, 0.0}) == 1.0);
  CHECK(max_abs(q.gamma_gradient({0.0, 0.0, 0.0})) == 0.0);
}

TEST_CASE("ring gradient is undefined on the axis") {
  const auto p = RefractiveProfile::gaussian_ring(1.0, 1.0, 2.0, 1.0);
  CHECK_NOTHROW(p.gamma({0.0, 0.0, 0.5}));  // value extends continuously
  CHECK_THROWS_AS(p.gamma_gradient({0.0, 0.0, 0.5}), std::domain_error);
}

TEST_CASE("invalid profile parameters are rejected") {
  CHECK_THROWS_AS(RefractiveProfile::uniform(0.5), std::invalid_argument);
  CHECK_THROWS_AS(RefractiveProfile::gaussian_mirage(-1.0, 2.0, Symmetry::Spherical),
                  std::invalid_argument);
  CHECK_THROWS_AS(RefractiveProfile::gaussian_mirage(1.0, 0.0, Symmetry::Spherical),
                  std::invalid_argument);
  CHECK_THROWS_AS(RefractiveProfile::gaussian_ring(1.0, -2.0, 2.0, 1.0), std::invalid_argument);
}
