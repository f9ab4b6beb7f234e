#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "aniso/curvature.hpp"
#include "aniso/rng.hpp"

using namespace aniso;

namespace {
RefractiveProfile mirage_sph() {
  return RefractiveProfile::gaussian_mirage(1.0, 2.5, Symmetry::Spherical);
}

PhasePoint sample(SplitMix64& rng) {
  return {{rng.uniform(0.5, 3.0), rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)}, rng.box(1.2)};
}
}  // namespace

TEST_CASE("gamma = 0 kills every torsion and curvature") {
  SplitMix64 rng(61);
  const auto pr = RefractiveProfile::uniform(1.0);
  for (int i = 0; i < 10; i++) {
    const PhasePoint p = sample(rng);
    const TorsionSet t = torsions(pr, p);
    CHECK(max_abs(t.R) < 1e-10);
    CHECK(max_abs(t.P) < 1e-10);
    CHECK(max_abs(t.C) == 0.0);
    const CurvatureSet c = curvatures(pr, p);
    CHECK(max_abs(c.R4) < 1e-10);
    CHECK(max_abs(c.P4) < 1e-10);
    CHECK(max_abs(c.S4) < 1e-10);
    CHECK(max_abs(h_covariant_C(pr, p)) < 1e-10);
    const MetricityResiduals m = metricity_residuals(pr, p);
    CHECK(max_abs(m.h) < 1e-14);
    CHECK(max_abs(m.v) < 1e-14);
  }
}

TEST_CASE("uniform medium: R and P parts vanish, vertical geometry survives") {
  SplitMix64 rng(67);
  const auto pr = RefractiveProfile::uniform(std::sqrt(2.0));
  for (int i = 0; i < 10; i++) {
    const PhasePoint p = sample(rng);
    const TorsionSet t = torsions(pr, p);
    CHECK(max_abs(t.R) < 1e-8);
    CHECK(max_abs(t.P) < 1e-8);
    const CurvatureSet c = curvatures(pr, p);
    CHECK(max_abs(c.R4) < 1e-8);
    CHECK(max_abs(c.P4) < 1e-8);
    CHECK(max_abs(h_covariant_C(pr, p)) < 1e-8);
  }
  // C torsion and S curvature do not vanish; documented point x=(0.5,0.2,-0.3), y=e1
  const PhasePoint p{{0.5, 0.2, -0.3}, {1.0, 0.0, 0.0}};
  CHECK(max_abs(torsions(pr, p).C) > 0.1);
  CHECK(max_abs(curvatures(pr, p).S4) > 1e-3);
}

TEST_CASE("torsion antisymmetry R^i_jk = -R^i_kj") {
  SplitMix64 rng(71);
  const auto pr = mirage_sph();
  double worst = 0.0;
  for (int i = 0; i < 10; i++) {
    const PhasePoint p = sample(rng);
    const TorsionSet t = torsions(pr, p);
    for (int a = 0; a < 3; a++)
      for (int j = 0; j < 3; j++)
        for (int k = 0; k < 3; k++) worst = std::max(worst, std::abs(t.R[a][j][k] + t.R[a][k][j]));
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("curvature antisymmetries in the last index pair") {
  SplitMix64 rng(73);
  const auto pr = mirage_sph();
  double worst = 0.0;
  for (int i = 0; i < 5; i++) {
    const PhasePoint p = sample(rng);
    const CurvatureSet c = curvatures(pr, p);
    for (int a = 0; a < 3; a++)
      for (int j = 0; j < 3; j++)
        for (int k = 0; k < 3; k++)
          for (int l = 0; l < 3; l++) {
            worst = std::max(worst, std::abs(c.R4[a][j][k][l] + c.R4[a][j][l][k]));
            worst = std::max(worst, std::abs(c.S4[a][j][k][l] + c.S4[a][j][l][k]));
          }
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("h-covariant derivative of C is stable under step halving") {
  const auto pr = mirage_sph();
  const PhasePoint p{{1.5, 0.7, -0.9}, {0.6, -0.4, 0.8}};
  const Ten4 a = h_covariant_C(pr, p, 1.0);
  const Ten4 b = h_covariant_C(pr, p, 0.5);
  CHECK(max_abs(a) > 0.0);
  CHECK(max_abs(a - b) < 1e-5);
}

TEST_CASE("metricity of the Cartan connection") {
  SplitMix64 rng(79);
  // uniform medium: the vertical derivative path is exact up to FD error
  const auto uni = RefractiveProfile::uniform(std::sqrt(2.0));
  for (int i = 0; i < 5; i++) {
    const PhasePoint p = sample(rng);
    const MetricityResiduals m = metricity_residuals(uni, p);
    CHECK(max_abs(m.h) < 1e-8);
    CHECK(max_abs(m.v) < 1e-8);
  }
  const auto pr = mirage_sph();
  double worst = 0.0;
  for (int i = 0; i < 100; i++) {
    const PhasePoint p = sample(rng);
    const MetricityResiduals m = metricity_residuals(pr, p);
    worst = std::max({worst, max_abs(m.h), max_abs(m.v)});
  }
  CHECK(worst < 1e-5);
}

TEST_CASE("every FD-built tensor is stable under step halving") {
  const auto pr = mirage_sph();
  const PhasePoint p{{1.1, -0.6, 0.4}, {0.5, 0.9, -0.3}};
  const TorsionSet t1 = torsions(pr, p, 1.0), t2 = torsions(pr, p, 0.5);
  CHECK(max_abs(t1.R - t2.R) < 1e-5);
  CHECK(max_abs(t1.P - t2.P) < 1e-5);
  const CurvatureSet c1 = curvatures(pr, p, 1.0), c2 = curvatures(pr, p, 0.5);
  CHECK(max_abs(c1.R4 - c2.R4) < 1e-4);
  CHECK(max_abs(c1.P4 - c2.P4) < 1e-4);
  CHECK(max_abs(c1.S4 - c2.S4) < 1e-4);
  const MetricityResiduals m1 = metricity_residuals(pr, p, 1.0);
  const MetricityResiduals m2 = metricity_residuals(pr, p, 0.5);
  CHECK(max_abs(m1.h - m2.h) < 1e-4);
  CHECK(max_abs(m1.v - m2.v) < 1e-4);
}
