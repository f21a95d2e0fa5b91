#pragma once

#include <array>
#include <cmath>

#include <Eigen/Dense>

#include "arcas/errors.hpp"

namespace arcas {

inline constexpr double kPi = 3.14159265358979323846;

inline double deg2rad(double deg) { return deg * (kPi / 180.0); }
inline double rad2deg(double rad) { return rad * (180.0 / kPi); }

/// 3D vector in meters (or m/s when used as a velocity).
struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
  Vec3& operator+=(const Vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }

  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double squared_norm() const { return dot(*this); }
  double norm() const { return std::sqrt(squared_norm()); }

  Vec3 normalized() const {
    const double n = norm();
    if (n < 1e-12) throw ZeroRange();
    return *this / n;
  }

  bool is_finite() const {
    return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
  }

  Eigen::Vector3d eigen() const { return {x, y, z}; }
  static Vec3 of(const Eigen::Vector3d& v) { return {v.x(), v.y(), v.z()}; }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

/// World vertical. SLAM world frames are gravity aligned with +Y up; the
/// ground plane is X-Z. Horizontal-plane angles are measured about this axis.
inline constexpr Vec3 kWorldUp{0.0, 1.0, 0.0};

/// Proper rotation (member of SO(3)). Construction through from_matrix
/// validates orthogonality and det(+1) to 1e-9; all other constructors
/// produce exact rotations by composition.
class Rotation3 {
 public:
  Rotation3() : m_(Eigen::Matrix3d::Identity()) {}

  static Rotation3 identity() { return Rotation3(); }

  /// Validates and wraps a 3x3 matrix. Throws InvalidConfig if the matrix is
  /// not orthogonal with det +1 to within 1e-9.
  static Rotation3 from_matrix(const Eigen::Matrix3d& m);

  /// Unchecked wrap for matrices that are rotations by construction
  /// (e.g. SVD products). Callers are responsible for the invariant.
  static Rotation3 from_matrix_unchecked(const Eigen::Matrix3d& m) {
    return Rotation3(m);
  }

  static Rotation3 axis_angle_deg(const Vec3& axis, double deg);

  Vec3 apply(const Vec3& v) const { return Vec3::of(m_ * v.eigen()); }
  Rotation3 inverse() const { return Rotation3(m_.transpose()); }
  Rotation3 operator*(const Rotation3& o) const { return Rotation3(m_ * o.m_); }

  const Eigen::Matrix3d& matrix() const { return m_; }
  std::array<double, 9> row_major() const;

  /// Deviation from orthogonality, ||R^T R - I||_inf.
  double orthogonality_error() const;

 private:
  explicit Rotation3(const Eigen::Matrix3d& m) : m_(m) {}
  Eigen::Matrix3d m_;
};

/// Rotation followed by a translation: p' = R p + t.
struct RigidTransform {
  Rotation3 rotation;
  Vec3 translation;

  static RigidTransform identity() { return {}; }
};

Vec3 apply_transform(const RigidTransform& t, const Vec3& p);
RigidTransform invert_transform(const RigidTransform& t);

/// Composition: apply_transform(compose(a, b), p) == a(b(p)).
RigidTransform compose(const RigidTransform& a, const RigidTransform& b);

/// Position plus unit facing direction of a headset user.
struct Pose {
  Vec3 position;
  Vec3 forward{0.0, 0.0, 1.0};
};

/// Builds a pose, normalizing the forward vector. Throws ZeroRange when the
/// direction is degenerate.
Pose make_pose(const Vec3& position, const Vec3& forward);

/// Unsigned 3D angle between two vectors, in degrees.
double angle_between_deg(const Vec3& a, const Vec3& b);

/// Signed horizontal-plane angle from the ego forward direction to the
/// target, in degrees, (-180, +180]. Positive means the target lies to the
/// user's right. Both vectors are projected onto the plane orthogonal to
/// kWorldUp before the angle is taken. Throws ZeroRange when the target
/// coincides with the ego position (within 1e-6 m) or sits on the vertical
/// axis through it.
double relative_bearing_deg(const Pose& ego, const Vec3& target_pos);

}  // namespace arcas
