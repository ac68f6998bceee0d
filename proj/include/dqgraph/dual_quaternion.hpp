#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>

#include "dqgraph/quaternion.hpp"
#include "dqgraph/tolerances.hpp"

namespace dqgraph {

using Rng = std::mt19937_64;

/// Dual number s + d eps with eps^2 = 0.
struct DualNumber {
  double s{0.0};
  double d{0.0};

  constexpr bool operator==(const DualNumber&) const = default;
};

constexpr DualNumber operator+(const DualNumber& a, const DualNumber& b) { return {a.s + b.s, a.d + b.d}; }
constexpr DualNumber operator-(const DualNumber& a, const DualNumber& b) { return {a.s - b.s, a.d - b.d}; }
constexpr DualNumber operator*(const DualNumber& a, const DualNumber& b) {
  return {a.s * b.s, a.s * b.d + a.d * b.s};
}

/// Dual quaternion q_s + q_d eps. `s` is the standard part, `d` the dual part.
struct DualQuaternion {
  Quaternion s;
  Quaternion d;

  constexpr DualQuaternion() = default;
  constexpr DualQuaternion(double real) : s{real} {}           // NOLINT(google-explicit-constructor)
  constexpr DualQuaternion(const Quaternion& s_) : s{s_} {}    // NOLINT(google-explicit-constructor)
  constexpr DualQuaternion(const Quaternion& s_, const Quaternion& d_) : s{s_}, d{d_} {}

  static constexpr DualQuaternion identity() { return {Quaternion::identity(), Quaternion{}}; }

  constexpr bool operator==(const DualQuaternion&) const = default;

  constexpr DualQuaternion conj() const { return {s.conj(), d.conj()}; }

  /// Dual-number magnitude:
  ///   |q_s| + (q_s q_d* + q_d q_s*) / (2 |q_s|) eps   if q_s != 0,
  ///   |q_d| eps                                         otherwise.
  DualNumber magnitude() const;

  bool is_appreciable(double tol = kAppreciableTol) const { return s.norm() > tol; }

  /// s^-1 - s^-1 d s^-1 eps. Throws Error(not_appreciable) if |q_s| <= kAppreciableTol.
  DualQuaternion inverse() const;

  /// Euclidean norm over all 8 real components.
  double norm8() const { return std::sqrt(s.norm2() + d.norm2()); }

  constexpr DualQuaternion& operator+=(const DualQuaternion& o) {
    s += o.s; d += o.d;
    return *this;
  }
  constexpr DualQuaternion& operator-=(const DualQuaternion& o) {
    s -= o.s; d -= o.d;
    return *this;
  }
  constexpr DualQuaternion& operator*=(double r) {
    s *= r; d *= r;
    return *this;
  }
};

constexpr DualQuaternion operator+(DualQuaternion a, const DualQuaternion& b) { return a += b; }
constexpr DualQuaternion operator-(DualQuaternion a, const DualQuaternion& b) { return a -= b; }
constexpr DualQuaternion operator-(const DualQuaternion& a) { return {-a.s, -a.d}; }
constexpr DualQuaternion operator*(DualQuaternion a, double r) { return a *= r; }
constexpr DualQuaternion operator*(double r, DualQuaternion a) { return a *= r; }
constexpr DualQuaternion operator*(const DualQuaternion& a, const DualQuaternion& b) {
  return {a.s * b.s, a.s * b.d + a.d * b.s};
}

inline DualNumber dq_magnitude(const DualQuaternion& q) { return q.magnitude(); }
inline DualQuaternion dq_inverse(const DualQuaternion& q) { return q.inverse(); }
inline double distance(const DualQuaternion& a, const DualQuaternion& b) { return (a - b).norm8(); }

/// | |q_s| - 1 | and |q_s q_d* + q_d q_s*| (the latter is 2 |Re(q_s q_d*)|).
struct UnitDefect {
  double standard{0.0};
  double orthogonality{0.0};
};
UnitDefect unit_defect(const DualQuaternion& q);
bool is_unit(const DualQuaternion& q, double tol = kUnitTol);

/// A dual quaternion with |q| = 1 + 0 eps. The group is closed under product
/// and conjugation, so neither re-validates.
class UnitDualQuaternion {
 public:
  UnitDualQuaternion() : value_{DualQuaternion::identity()} {}

  /// Throws Error(not_unit) if `q` fails unit validation at `tol`.
  static UnitDualQuaternion from(const DualQuaternion& q, double tol = kUnitTol);

  const DualQuaternion& value() const { return value_; }
  operator const DualQuaternion&() const { return value_; }  // NOLINT(google-explicit-constructor)

  UnitDualQuaternion conj() const { return UnitDualQuaternion{value_.conj()}; }
  UnitDualQuaternion inverse() const { return conj(); }

  friend UnitDualQuaternion operator*(const UnitDualQuaternion& a, const UnitDualQuaternion& b) {
    return UnitDualQuaternion{a.value_ * b.value_};
  }
  bool operator==(const UnitDualQuaternion&) const = default;

 private:
  explicit UnitDualQuaternion(const DualQuaternion& q) : value_{q} {}
  DualQuaternion value_;
};

/// Rigid motion q_s + (eps/2) q_s p for a unit rotation q_s and a pure
/// translation p = [0, p_vec]. Throws Error(not_unit) / Error(not_pure).
UnitDualQuaternion udq_from_motion(const Quaternion& rotation, const Quaternion& translation);

/// Rotation from a normalised 4-d Gaussian, translation from a 3-d Gaussian.
UnitDualQuaternion random_udq(Rng& rng);
UnitDualQuaternion random_udq(std::uint64_t seed);

std::ostream& operator<<(std::ostream& os, const DualNumber& q);
std::ostream& operator<<(std::ostream& os, const DualQuaternion& q);

}  // namespace dqgraph
