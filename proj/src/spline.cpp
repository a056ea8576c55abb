#include "radarcal/spline.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

#include "radarcal/errors.hpp"

namespace radarcal {

namespace {

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) {
    r *= double(n - i) / double(i + 1);
  }
  return r;
}

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

void SplineConfig::validate() const {
  if (order < 2) throw ConfigError("spline order must be >= 2");
  if (!(knot_spacing > 0.0)) throw ConfigError("knot spacing must be positive");
  if (num_control_points < order) {
    throw ConfigError("spline needs at least `order` control points");
  }
}

Eigen::MatrixXd blending_matrix(int k) {
  if (k < 2) throw ConfigError("spline order must be >= 2");
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(k, k);
  const double kfac = factorial(k - 1);
  for (int s = 0; s < k; ++s) {
    for (int n = 0; n < k; ++n) {
      double sum = 0.0;
      for (int l = s; l < k; ++l) {
        const double sign = ((l - s) % 2 == 0) ? 1.0 : -1.0;
        sum += sign * binomial(k, l - s) * std::pow(double(k - 1 - l), double(k - 1 - n));
      }
      m(s, n) = binomial(k - 1, n) / kfac * sum;
    }
  }
  return m;
}

Eigen::MatrixXd mixing_matrix(int k) {
  const Eigen::MatrixXd m = blending_matrix(k);
  Eigen::MatrixXd mt = Eigen::MatrixXd::Zero(k, k);
  for (int a = 0; a < k; ++a) {
    for (int s = a; s < k; ++s) {
      mt.row(a) += m.row(s);
    }
  }
  return mt;
}

const Eigen::MatrixXd& cached_mixing_matrix(int k) {
  static std::mutex mu;
  static std::map<int, Eigen::MatrixXd> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(k);
  if (it == cache.end()) {
    it = cache.emplace(k, mixing_matrix(k)).first;
  }
  return it->second;
}

std::pair<int, double> normalized_time(const SplineConfig& config, double t) {
  config.validate();
  const int segments = config.num_segments();
  if (segments <= 0 || t < config.t_min() || t >= config.t_max()) {
    std::ostringstream msg;
    msg << "time " << t << " outside spline domain [" << config.t_min() << ", "
        << config.t_max() << ")";
    throw DomainError(msg.str());
  }
  const double s = (t - config.t0) / config.knot_spacing;
  int i = int(std::floor(s));
  if (i > segments - 1) i = segments - 1;  // guards FP roundoff at t_max - eps
  if (i < 0) i = 0;
  return {i, s - i};
}

namespace {

SplineWeights weights_from_u(const SplineConfig& config, int segment, double u) {
  const int k = config.order;
  const Eigen::MatrixXd& mt = cached_mixing_matrix(k);
  Eigen::VectorXd up(k), dup(k);
  up(0) = 1.0;
  dup(0) = 0.0;
  for (int n = 1; n < k; ++n) {
    up(n) = up(n - 1) * u;
    dup(n) = n * up(n - 1);
  }
  SplineWeights w;
  w.segment = segment;
  w.lambda = mt.bottomRows(k - 1) * up;
  w.dlambda = mt.bottomRows(k - 1) * dup;
  return w;
}

}  // namespace

SplineWeights spline_weights(const SplineConfig& config, double t) {
  const auto [segment, u] = normalized_time(config, t);
  return weights_from_u(config, segment, u);
}

SplineWeights spline_weights_segment(const SplineConfig& config, int segment, double u) {
  config.validate();
  if (segment < 0 || segment >= config.num_segments()) {
    throw DomainError("segment index outside spline domain");
  }
  return weights_from_u(config, segment, u);
}

void TranslationSpline::validate() const {
  config.validate();
  if (int(control_points.size()) != config.num_control_points) {
    throw ConfigError("translation spline control point count does not match config");
  }
}

Vec3 eval_translation(const TranslationSpline& spline, const SplineWeights& w) {
  const int k = spline.config.order;
  Vec3 p = spline.control_points[w.segment];
  for (int j = 1; j < k; ++j) {
    const Vec3 d = spline.control_points[w.segment + j] - spline.control_points[w.segment + j - 1];
    p += w.lambda(j - 1) * d;
  }
  return p;
}

Vec3 eval_translation_velocity(const TranslationSpline& spline, const SplineWeights& w) {
  const int k = spline.config.order;
  Vec3 v = Vec3::Zero();
  for (int j = 1; j < k; ++j) {
    const Vec3 d = spline.control_points[w.segment + j] - spline.control_points[w.segment + j - 1];
    v += w.dlambda(j - 1) * d;
  }
  return v / spline.config.knot_spacing;
}

Vec3 eval_translation(const TranslationSpline& spline, double t) {
  spline.validate();
  return eval_translation(spline, spline_weights(spline.config, t));
}

Vec3 eval_translation_velocity(const TranslationSpline& spline, double t) {
  spline.validate();
  return eval_translation_velocity(spline, spline_weights(spline.config, t));
}

void RotationSpline::validate() const {
  config.validate();
  if (int(control_points.size()) != config.num_control_points) {
    throw ConfigError("rotation spline control point count does not match config");
  }
}

Mat3 eval_rotation(const RotationSpline& spline, const SplineWeights& w) {
  const int k = spline.config.order;
  Mat3 R = spline.control_points[w.segment];
  for (int j = 1; j < k; ++j) {
    const Vec3 phi = log_so3(spline.control_points[w.segment + j - 1].transpose() *
                             spline.control_points[w.segment + j]);
    R *= exp_so3(w.lambda(j - 1) * phi);
  }
  return R;
}

std::pair<Mat3, Vec3> eval_rotation_and_velocity(const RotationSpline& spline,
                                                 const SplineWeights& w) {
  const int k = spline.config.order;
  const int i = w.segment;

  // R = R_i * A_1 * ... * A_{k-1} with A_j = exp(lambda_j phi_j). Each factor
  // contributes lambda_dot_j * phi_j conjugated into the body frame by the
  // product of the factors to its right.
  Mat3 R = spline.control_points[i];
  Vec3 omega = Vec3::Zero();  // accumulated in the frame after factor j
  for (int j = 1; j < k; ++j) {
    const Vec3 phi =
        log_so3(spline.control_points[i + j - 1].transpose() * spline.control_points[i + j]);
    const Mat3 A = exp_so3(w.lambda(j - 1) * phi);
    R *= A;
    omega = A.transpose() * omega + w.dlambda(j - 1) * phi;
  }
  return {R, omega / spline.config.knot_spacing};
}

Vec3 eval_rotation_velocity(const RotationSpline& spline, const SplineWeights& w) {
  return eval_rotation_and_velocity(spline, w).second;
}

Mat3 eval_rotation(const RotationSpline& spline, double t) {
  spline.validate();
  return eval_rotation(spline, spline_weights(spline.config, t));
}

Vec3 eval_rotation_velocity(const RotationSpline& spline, double t) {
  spline.validate();
  return eval_rotation_velocity(spline, spline_weights(spline.config, t));
}

}  // namespace radarcal
