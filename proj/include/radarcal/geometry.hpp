#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace radarcal {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat6 = Eigen::Matrix<double, 6, 6>;

/// Angle below which exp/log/left-Jacobian switch to their Taylor expansions.
inline constexpr double kSmallAngle = 1e-6;

/// Orthonormality/determinant tolerance for rotation matrices.
inline constexpr double kRotationTol = 1e-9;

/// skew(v) * s == v x s for all s.
Mat3 skew(const Vec3& v);

/// true iff R'R = I and det(R) = 1 within `tol`.
bool is_rotation(const Mat3& R, double tol = kRotationTol);

/// Exponential map so(3) -> SO(3) (Rodrigues, Taylor fallback below kSmallAngle).
Mat3 exp_so3(const Vec3& phi);

/// Logarithm map SO(3) -> so(3). Returns the angle-axis vector with angle in
/// [0, pi]. At angle pi the axis sign is fixed so that its first nonzero
/// component is nonnegative.
Vec3 log_so3(const Mat3& R);

/// Left Jacobian of SO(3): exp(phi + delta) ~ exp(J(phi) * delta) * exp(phi).
Mat3 left_jacobian(const Vec3& phi);

/// Inverse of the SO(3) left Jacobian.
Mat3 left_jacobian_inverse(const Vec3& phi);

/// Rigid transform in split form: point mapping p -> R * p + r.
struct Pose {
  Mat3 rotation = Mat3::Identity();
  Vec3 translation = Vec3::Zero();

  static Pose identity() { return Pose{}; }

  Vec3 apply(const Vec3& p) const { return rotation * p + translation; }
};

Pose pose_compose(const Pose& a, const Pose& b);
Pose pose_inverse(const Pose& a);

/// Angle (rad) of the rotation aligning a with b, |log(a * b')|.
double rotation_angle_between(const Mat3& a, const Mat3& b);

}  // namespace radarcal
