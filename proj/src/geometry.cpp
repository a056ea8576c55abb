#include "radarcal/geometry.hpp"

#include <cmath>

namespace radarcal {

Mat3 skew(const Vec3& v) {
  Mat3 m;
  // clang-format off
  m <<     0, -v.z(),  v.y(),
       v.z(),      0, -v.x(),
      -v.y(),  v.x(),      0;
  // clang-format on
  return m;
}

bool is_rotation(const Mat3& R, double tol) {
  const double ortho = (R.transpose() * R - Mat3::Identity()).cwiseAbs().maxCoeff();
  return ortho <= tol && std::abs(R.determinant() - 1.0) <= tol;
}

Mat3 exp_so3(const Vec3& phi) {
  const double theta2 = phi.squaredNorm();
  const double theta = std::sqrt(theta2);
  const Mat3 hat = skew(phi);
  if (theta < kSmallAngle) {
    return Mat3::Identity() + hat + 0.5 * hat * hat;
  }
  const double a = std::sin(theta) / theta;
  const double b = (1.0 - std::cos(theta)) / theta2;
  return Mat3::Identity() + a * hat + b * hat * hat;
}

Vec3 log_so3(const Mat3& R) {
  // The quaternion route stays accurate across the whole angle range,
  // including near pi where trace-based formulas cancel.
  Eigen::Quaterniond q(R);
  q.normalize();
  if (q.w() < 0.0) {
    q.coeffs() = -q.coeffs();
  }
  const Vec3 vec(q.x(), q.y(), q.z());
  const double vn = vec.norm();
  const double angle = 2.0 * std::atan2(vn, q.w());
  if (vn < 1e-12) {
    return 2.0 * vec;  // angle ~ 0, vec ~ phi/2
  }
  Vec3 axis = vec / vn;
  if (angle > M_PI - 1e-9) {
    // exp(pi*a) == exp(-pi*a): fix the sign so the first nonzero axis
    // component is nonnegative.
    for (int i = 0; i < 3; ++i) {
      if (std::abs(axis[i]) > 1e-12) {
        if (axis[i] < 0.0) axis = -axis;
        break;
      }
    }
  }
  return angle * axis;
}

Mat3 left_jacobian(const Vec3& phi) {
  const double theta2 = phi.squaredNorm();
  const double theta = std::sqrt(theta2);
  const Mat3 hat = skew(phi);
  if (theta < kSmallAngle) {
    return Mat3::Identity() + 0.5 * hat + (1.0 / 6.0) * hat * hat;
  }
  const double a = (1.0 - std::cos(theta)) / theta2;
  const double b = (theta - std::sin(theta)) / (theta2 * theta);
  return Mat3::Identity() + a * hat + b * hat * hat;
}

Mat3 left_jacobian_inverse(const Vec3& phi) {
  const double theta2 = phi.squaredNorm();
  const double theta = std::sqrt(theta2);
  const Mat3 hat = skew(phi);
  if (theta < kSmallAngle) {
    return Mat3::Identity() - 0.5 * hat + (1.0 / 12.0) * hat * hat;
  }
  const double half = 0.5 * theta;
  const double c = (1.0 - half * std::cos(half) / std::sin(half)) / theta2;
  return Mat3::Identity() - 0.5 * hat + c * hat * hat;
}

Pose pose_compose(const Pose& a, const Pose& b) {
  return Pose{a.rotation * b.rotation, a.rotation * b.translation + a.translation};
}

Pose pose_inverse(const Pose& a) {
  const Mat3 Rt = a.rotation.transpose();
  return Pose{Rt, -(Rt * a.translation)};
}

double rotation_angle_between(const Mat3& a, const Mat3& b) {
  return log_so3(a * b.transpose()).norm();
}

}  // namespace radarcal
