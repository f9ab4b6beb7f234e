#pragma once
#include <cstdint>

#include "aniso/geom.hpp"

namespace aniso {

// splitmix64 (Steele/Lea/Flood). Fixed algorithm so a seed reproduces the same
// sample points in any build of this code base; std distributions are not used
// because their output is implementation-defined.
struct SplitMix64 {
  uint64_t state;

  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0,1)
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * unit(); }

  Vec3 box(double half) {
    return {uniform(-half, half), uniform(-half, half), uniform(-half, half)};
  }

  Vec3 unit_vector() {
    for (;;) {
      Vec3 v = box(1.0);
      double n2 = norm2(v);
      if (n2 > 1e-4 && n2 <= 1.0) return (1.0 / std::sqrt(n2)) * v;
    }
  }

  // random orthogonal matrix via Gram-Schmidt; both determinant signs occur
  Mat3 orthogonal() {
    Vec3 a = unit_vector();
    Vec3 b{};
    for (;;) {
      b = unit_vector();
      b = b - dot(a, b) * a;
      double n2 = norm2(b);
      if (n2 > 1e-4) {
        b = (1.0 / std::sqrt(n2)) * b;
        break;
      }
    }
    Vec3 c = {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
    if (next() & 1) c = -c;
    return Mat3{{{a[0], a[1], a[2]}, {b[0], b[1], b[2]}, {c[0], c[1], c[2]}}};
  }
};

}  // namespace aniso
