#include "dqgraph/dual_quaternion.hpp"

#include <cmath>
#include <ostream>

#include "dqgraph/errors.hpp"

namespace dqgraph {

Quaternion Quaternion::inverse() const {
  const double n2 = norm2();
  if (n2 == 0.0) throw Error(Errc::not_appreciable, "zero quaternion has no inverse");
  return conj() / n2;
}

Quaternion Quaternion::normalized() const {
  const double n = norm();
  if (n == 0.0) throw Error(Errc::not_appreciable, "cannot normalise the zero quaternion");
  return *this / n;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << '[' << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ']';
}

DualNumber DualQuaternion::magnitude() const {
  if (s.is_zero()) return {0.0, d.norm()};
  const double ns = s.norm();
  // q_s q_d* + q_d q_s* = 2 Re(q_s q_d*) = 2 dot(q_s, q_d).
  return {ns, dot(s, d) / ns};
}

DualQuaternion DualQuaternion::inverse() const {
  if (!is_appreciable()) throw Error(Errc::not_appreciable, "dual quaternion with zero standard part");
  const Quaternion si = s.inverse();
  return {si, -(si * d * si)};
}

UnitDefect unit_defect(const DualQuaternion& q) {
  return {std::abs(q.s.norm() - 1.0), 2.0 * std::abs(dot(q.s, q.d))};
}

bool is_unit(const DualQuaternion& q, double tol) {
  const UnitDefect defect = unit_defect(q);
  return defect.standard <= tol && defect.orthogonality <= tol;
}

UnitDualQuaternion UnitDualQuaternion::from(const DualQuaternion& q, double tol) {
  if (!is_unit(q, tol)) throw Error(Errc::not_unit, "dual quaternion is not unit");
  return UnitDualQuaternion{q};
}

UnitDualQuaternion udq_from_motion(const Quaternion& rotation, const Quaternion& translation) {
  if (std::abs(rotation.norm() - 1.0) > kUnitTol) throw Error(Errc::not_unit, "rotation is not a unit quaternion");
  if (std::abs(translation.w) > kUnitTol) throw Error(Errc::not_pure, "translation has a nonzero scalar part");
  return UnitDualQuaternion::from({rotation, 0.5 * (rotation * translation)});
}

UnitDualQuaternion random_udq(Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Quaternion rotation;
  do {
    rotation = {gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
  } while (rotation.norm() < 1e-6);
  rotation = rotation.normalized();
  const Quaternion translation{0.0, gauss(rng), gauss(rng), gauss(rng)};
  return udq_from_motion(rotation, translation);
}

UnitDualQuaternion random_udq(std::uint64_t seed) {
  Rng rng(seed);
  return random_udq(rng);
}

std::ostream& operator<<(std::ostream& os, const DualNumber& q) { return os << q.s << " + " << q.d << "eps"; }

std::ostream& operator<<(std::ostream& os, const DualQuaternion& q) { return os << q.s << " + " << q.d << "eps"; }

}  // namespace dqgraph
