#pragma once

#include <array>
#include <cmath>

namespace qgeo {

using Vec3 = std::array<double, 3>;
using Vec4 = std::array<double, 4>;

inline double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline double dot(const Vec4& a, const Vec4& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline double norm(const Vec4& a) { return std::sqrt(dot(a, a)); }

inline Vec3 scaled(const Vec3& a, double c) {
  return {c * a[0], c * a[1], c * a[2]};
}

inline Vec4 scaled(const Vec4& a, double c) {
  return {c * a[0], c * a[1], c * a[2], c * a[3]};
}

inline Vec3 add(const Vec3& a, const Vec3& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

inline Vec4 add(const Vec4& a, const Vec4& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

inline Vec3 sub(const Vec3& a, const Vec3& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

inline Vec4 sub(const Vec4& a, const Vec4& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

}  // namespace qgeo
