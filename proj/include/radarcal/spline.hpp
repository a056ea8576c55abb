#pragma once

#include <utility>
#include <vector>

#include <Eigen/Core>

#include "radarcal/geometry.hpp"

namespace radarcal {

/// Uniform-knot spline layout. Control point i sits at t0 + i * knot_spacing;
/// with N+1 = num_control_points the valid evaluation domain is the half-open
/// interval [t0, t0 + (N - k + 1) * knot_spacing).
struct SplineConfig {
  int order = 4;  // k
  double knot_spacing = 0.1;
  double t0 = 0.0;
  int num_control_points = 0;

  int num_segments() const { return num_control_points - order; }
  double t_min() const { return t0; }
  double t_max() const { return t0 + num_segments() * knot_spacing; }
  double knot_time(int i) const { return t0 + i * knot_spacing; }

  /// Throws ConfigError when k < 2, knot_spacing <= 0 or too few control points.
  void validate() const;
};

/// Cumulative mixing matrix M~_k (k x k). Row a holds the polynomial
/// coefficients of lambda_a(u) in increasing powers of u; row 0 is the
/// constant weight of the base control point (1, 0, ..., 0).
Eigen::MatrixXd mixing_matrix(int k);

/// Non-cumulative blending matrix M_k (row s = coefficients of basis s).
Eigen::MatrixXd blending_matrix(int k);

/// Cached by order; returns a shared immutable reference.
const Eigen::MatrixXd& cached_mixing_matrix(int k);

/// Maps t to (segment index i, normalized u in [0,1)) with
/// t_i <= t < t_{i+1}. Throws DomainError outside the valid domain.
std::pair<int, double> normalized_time(const SplineConfig& config, double t);

/// Basis weights for one evaluation point: lambda_j(u) and d(lambda_j)/du
/// for j = 1..k-1 (the cumulative difference weights).
struct SplineWeights {
  int segment = 0;
  Eigen::VectorXd lambda;   // size k-1
  Eigen::VectorXd dlambda;  // size k-1, derivative w.r.t. u
};

SplineWeights spline_weights(const SplineConfig& config, double t);
SplineWeights spline_weights_segment(const SplineConfig& config, int segment, double u);

struct TranslationSpline {
  SplineConfig config;
  std::vector<Vec3> control_points;

  void validate() const;
};

Vec3 eval_translation(const TranslationSpline& spline, double t);
Vec3 eval_translation_velocity(const TranslationSpline& spline, double t);
Vec3 eval_translation(const TranslationSpline& spline, const SplineWeights& w);
Vec3 eval_translation_velocity(const TranslationSpline& spline, const SplineWeights& w);

struct RotationSpline {
  SplineConfig config;
  std::vector<Mat3> control_points;

  void validate() const;
};

Mat3 eval_rotation(const RotationSpline& spline, double t);
/// Body-frame angular velocity: skew(omega) = R(t)' * dR/dt.
Vec3 eval_rotation_velocity(const RotationSpline& spline, double t);
Mat3 eval_rotation(const RotationSpline& spline, const SplineWeights& w);
Vec3 eval_rotation_velocity(const RotationSpline& spline, const SplineWeights& w);

/// Rotation and body-frame angular velocity in one pass (shares the factor
/// products between the two).
std::pair<Mat3, Vec3> eval_rotation_and_velocity(const RotationSpline& spline,
                                                 const SplineWeights& w);

}  // namespace radarcal
