#pragma once
#include <array>
#include <cmath>
#include <cstddef>

namespace aniso {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<std::array<double, 3>, 3>;
using Ten3 = std::array<Mat3, 3>;  // T[i][j][k]
using Ten4 = std::array<Ten3, 3>;  // T[i][j][k][l]

// A point (x, y) of the 6-dimensional phase space: position + direction.
struct PhasePoint {
  Vec3 x{};
  Vec3 y{};
};

inline double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
inline double norm2(const Vec3& a) { return dot(a, a); }
inline double norm(const Vec3& a) { return std::sqrt(norm2(a)); }

inline Vec3 operator+(const Vec3& a, const Vec3& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}
inline Vec3 operator-(const Vec3& a, const Vec3& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}
inline Vec3 operator*(double c, const Vec3& a) { return {c * a[0], c * a[1], c * a[2]}; }
inline Vec3 operator-(const Vec3& a) { return {-a[0], -a[1], -a[2]}; }

inline Mat3 operator+(const Mat3& a, const Mat3& b) {
  Mat3 r{};
  for (int i = 0; i < 3; i++)
    for (int j = 0; j < 3; j++) r[i][j] = a[i][j] + b[i][j];
  return r;
}
inline Mat3 operator-(const Mat3& a, const Mat3& b) {
  Mat3 r{};
  for (int i = 0; i < 3; i++)
    for (int j = 0; j < 3; j++) r[i][j] = a[i][j] - b[i][j];
  return r;
}
inline Mat3 operator*(double c, const Mat3& a) {
  Mat3 r{};
  for (int i = 0; i < 3; i++)
    for (int j = 0; j < 3; j++) r[i][j] = c * a[i][j];
  return r;
}

inline Ten3 operator+(const Ten3& a, const Ten3& b) {
  Ten3 r{};
  for (int i = 0; i < 3; i++) r[i] = a[i] + b[i];
  return r;
}
inline Ten3 operator-(const Ten3& a, const Ten3& b) {
  Ten3 r{};
  for (int i = 0; i < 3; i++) r[i] = a[i] - b[i];
  return r;
}
inline Ten3 operator*(double c, const Ten3& a) {
  Ten3 r{};
  for (int i = 0; i < 3; i++) r[i] = c * a[i];
  return r;
}

inline Ten4 operator-(const Ten4& a, const Ten4& b) {
  Ten4 r{};
  for (int i = 0; i < 3; i++) r[i] = a[i] - b[i];
  return r;
}

inline Mat3 identity3() {
  Mat3 r{};
  r[0][0] = r[1][1] = r[2][2] = 1.0;
  return r;
}
inline Mat3 transpose(const Mat3& a) {
  Mat3 r{};
  for (int i = 0; i < 3; i++)
    for (int j = 0; j < 3; j++) r[i][j] = a[j][i];
  return r;
}
inline Vec3 mat_vec(const Mat3& a, const Vec3& v) {
  Vec3 r{};
  for (int i = 0; i < 3; i++) r[i] = a[i][0] * v[0] + a[i][1] * v[1] + a[i][2] * v[2];
  return r;
}
inline Mat3 mat_mul(const Mat3& a, const Mat3& b) {
  Mat3 r{};
  for (int i = 0; i < 3; i++)
    for (int j = 0; j < 3; j++) {
      double s = 0.0;
      for (int k = 0; k < 3; k++) s += a[i][k] * b[k][j];
      r[i][j] = s;
    }
  return r;
}

inline double max_abs(double v) { return std::abs(v); }
inline double max_abs(const Vec3& v) {
  double m = 0.0;
  for (double e : v) m = std::max(m, std::abs(e));
  return m;
}
inline double max_abs(const Mat3& a) {
  double m = 0.0;
  for (const auto& row : a) m = std::max(m, max_abs(row));
  return m;
}
inline double max_abs(const Ten3& t) {
  double m = 0.0;
  for (const auto& a : t) m = std::max(m, max_abs(a));
  return m;
}
inline double max_abs(const Ten4& t) {
  double m = 0.0;
  for (const auto& a : t) m = std::max(m, max_abs(a));
  return m;
}

}  // namespace aniso
