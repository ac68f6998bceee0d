#pragma once

#include <cmath>
#include <iosfwd>

namespace dqgraph {

/// Quaternion w + x i + y j + z k, stored as (w, x, y, z).
///
/// Real scalars convert implicitly to the real axis, so `Quaternion q = 2.0;`
/// and `q * 0.5` both behave as expected.
struct Quaternion {
  double w{0.0};
  double x{0.0};
  double y{0.0};
  double z{0.0};

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_) : w{w_} {}  // NOLINT(google-explicit-constructor)
  constexpr Quaternion(double w_, double x_, double y_, double z_) : w{w_}, x{x_}, y{y_}, z{z_} {}

  static constexpr Quaternion identity() { return {1.0, 0.0, 0.0, 0.0}; }
  static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

  constexpr bool operator==(const Quaternion&) const = default;

  constexpr Quaternion conj() const { return {w, -x, -y, -z}; }
  constexpr double norm2() const { return w * w + x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm2()); }
  /// Norm of the vector part (x, y, z).
  double vector_norm() const { return std::sqrt(x * x + y * y + z * z); }
  constexpr bool is_zero() const { return w == 0.0 && x == 0.0 && y == 0.0 && z == 0.0; }

  /// Multiplicative inverse q* / |q|^2. Throws Error(not_appreciable) for q = 0.
  Quaternion inverse() const;
  /// q / |q|. Throws Error(not_appreciable) for q = 0.
  Quaternion normalized() const;

  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w; x += o.x; y += o.y; z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w; x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    w *= s; x *= s; y *= s; z *= s;
    return *this;
  }
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) { return a *= (1.0 / s); }

// Hamilton product: ij = k, jk = i, ki = j, i^2 = j^2 = k^2 = -1.
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

constexpr Quaternion quat_mul(const Quaternion& a, const Quaternion& b) { return a * b; }

/// Euclidean inner product of the 4 components; equals Re(a b*).
constexpr double dot(const Quaternion& a, const Quaternion& b) {
  return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

inline double distance(const Quaternion& a, const Quaternion& b) { return (a - b).norm(); }

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

}  // namespace dqgraph
