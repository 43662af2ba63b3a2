#pragma once
// Small dense 3-vector / 3x3 / 3x3x3 tensor helpers used throughout.
#include <array>
#include <cmath>
#include <complex>

namespace carsroa {

using cplx = std::complex<double>;
using Vec3r = std::array<double, 3>;
using Vec3c = std::array<cplx, 3>;
using Mat3r = std::array<std::array<double, 3>, 3>;
using Mat3c = std::array<std::array<cplx, 3>, 3>;
using Rank3r = std::array<Mat3r, 3>;
using Rank3c = std::array<Mat3c, 3>;

inline constexpr Mat3r zero_mat3r() { return Mat3r{}; }

// Right-handed Levi-Civita symbol, eps_xyz = +1.
inline constexpr double levi_civita(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0.0;
  if ((i == 0 && j == 1 && k == 2) || (i == 1 && j == 2 && k == 0) ||
      (i == 2 && j == 0 && k == 1))
    return 1.0;
  return -1.0;
}

template <typename T>
inline std::array<T, 3> cross(const std::array<T, 3>& a, const std::array<T, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

inline Vec3c cross(const Vec3c& a, const Vec3r& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

inline Vec3c cross(const Vec3r& a, const Vec3c& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

template <typename T, typename U>
inline auto dot(const std::array<T, 3>& a, const std::array<U, 3>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline double norm(const Vec3r& v) { return std::sqrt(dot(v, v)); }
inline double norm(const Vec3c& v) {
  return std::sqrt(std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]));
}

template <typename T>
inline std::array<T, 3> scale(const std::array<T, 3>& v, const T& s) {
  return {v[0] * s, v[1] * s, v[2] * s};
}

inline double trace(const Mat3r& m) { return m[0][0] + m[1][1] + m[2][2]; }
inline cplx trace(const Mat3c& m) { return m[0][0] + m[1][1] + m[2][2]; }

inline double frobenius_norm(const Mat3c& m) {
  double s = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += std::norm(m[i][j]);
  return std::sqrt(s);
}

inline double frobenius_norm(const Rank3c& t) {
  double s = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) s += std::norm(t[i][j][k]);
  return std::sqrt(s);
}

inline double max_abs(const Mat3r& m) {
  double s = 0;
  for (auto& row : m)
    for (double v : row) s = std::max(s, std::abs(v));
  return s;
}

inline double max_abs(const Mat3c& m) {
  double s = 0;
  for (auto& row : m)
    for (const cplx& v : row) s = std::max(s, std::abs(v));
  return s;
}

inline double frobenius_norm(const Mat3r& m) {
  double s = 0;
  for (auto& row : m)
    for (double v : row) s += v * v;
  return std::sqrt(s);
}

// y = M x
inline Vec3c matvec(const Mat3c& m, const Vec3c& x) {
  Vec3c y{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) y[i] += m[i][j] * x[j];
  return y;
}

inline Vec3r matvec(const Mat3r& m, const Vec3r& x) {
  Vec3r y{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) y[i] += m[i][j] * x[j];
  return y;
}

}  // namespace carsroa
