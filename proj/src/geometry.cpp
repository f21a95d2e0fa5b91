#include "arcas/geometry.hpp"

namespace arcas {

Rotation3 Rotation3::from_matrix(const Eigen::Matrix3d& m) {
  const double ortho = ((m.transpose() * m) - Eigen::Matrix3d::Identity())
                           .cwiseAbs()
                           .maxCoeff();
  if (ortho > 1e-9) {
    throw InvalidConfig("matrix is not orthogonal (error " + std::to_string(ortho) + ")");
  }
  const double det = m.determinant();
  if (std::abs(det - 1.0) > 1e-9) {
    throw InvalidConfig("matrix determinant is " + std::to_string(det) + ", not +1");
  }
  return Rotation3(m);
}

Rotation3 Rotation3::axis_angle_deg(const Vec3& axis, double deg) {
  const Eigen::AngleAxisd aa(deg2rad(deg), axis.eigen().normalized());
  return Rotation3(aa.toRotationMatrix());
}

std::array<double, 9> Rotation3::row_major() const {
  std::array<double, 9> out{};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) out[static_cast<std::size_t>(3 * r + c)] = m_(r, c);
  return out;
}

double Rotation3::orthogonality_error() const {
  return ((m_.transpose() * m_) - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff();
}

Vec3 apply_transform(const RigidTransform& t, const Vec3& p) {
  return t.rotation.apply(p) + t.translation;
}

RigidTransform invert_transform(const RigidTransform& t) {
  const Rotation3 rinv = t.rotation.inverse();
  return {rinv, -rinv.apply(t.translation)};
}

RigidTransform compose(const RigidTransform& a, const RigidTransform& b) {
  return {a.rotation * b.rotation, a.rotation.apply(b.translation) + a.translation};
}

Pose make_pose(const Vec3& position, const Vec3& forward) {
  return Pose{position, forward.normalized()};
}

double angle_between_deg(const Vec3& a, const Vec3& b) {
  const double denom = a.norm() * b.norm();
  if (denom < 1e-12) throw ZeroRange();
  const double c = std::clamp(a.dot(b) / denom, -1.0, 1.0);
  return rad2deg(std::acos(c));
}

double relative_bearing_deg(const Pose& ego, const Vec3& target_pos) {
  const Vec3 d = target_pos - ego.position;
  if (d.norm() < 1e-6) throw ZeroRange();

  // Project onto the horizontal plane; the cue logic needs azimuth only.
  const Vec3 d_h{d.x, 0.0, d.z};
  const Vec3 f_h{ego.forward.x, 0.0, ego.forward.z};
  if (d_h.norm() < 1e-12 || f_h.norm() < 1e-12) throw ZeroRange();

  const Vec3 fwd = f_h.normalized();
  const Vec3 right = kWorldUp.cross(fwd);  // +Y up, right-handed
  double deg = rad2deg(std::atan2(d_h.dot(right), d_h.dot(fwd)));
  if (deg <= -180.0) deg += 360.0;
  return deg;
}

}  // namespace arcas
