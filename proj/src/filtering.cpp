#include "arcas/filtering.hpp"

namespace arcas {

namespace {

using Matrix36 = Eigen::Matrix<double, 3, 6>;

Matrix36 observation_matrix() {
  Matrix36 h = Matrix36::Zero();
  h.block<3, 3>(0, 0) = Eigen::Matrix3d::Identity();
  return h;
}

Matrix6 process_noise(const NoiseParams& noise, double dt) {
  Vector6 q;
  const double l2 = noise.lambda * noise.lambda;
  const double m2 = noise.mu * noise.mu;
  q << l2, l2, l2, m2, m2, m2;
  if (noise.scale_process_by_dt) q *= dt;
  return q.asDiagonal();
}

}  // namespace

KalmanState initial_state(const Vec3& first_measurement, const NoiseParams& noise,
                          double max_speed) {
  noise.validate();
  KalmanState s;
  s.x.head<3>() = first_measurement.eigen();
  s.x.tail<3>().setZero();
  Vector6 p;
  const double s2 = noise.sigma * noise.sigma;
  const double v2 = max_speed * max_speed;
  p << s2, s2, s2, v2, v2, v2;
  s.P = p.asDiagonal();
  return s;
}

KalmanState predict(const KalmanState& state, double dt, const NoiseParams& noise) {
  if (!(dt > 0.0)) throw NonPositiveDt(dt);
  noise.validate();

  Matrix6 a = Matrix6::Identity();
  a.block<3, 3>(0, 3) = dt * Eigen::Matrix3d::Identity();

  KalmanState out;
  out.x = a * state.x;
  out.P = a * state.P * a.transpose() + process_noise(noise, dt);
  out.P = 0.5 * (out.P + out.P.transpose());  // keep symmetric
  return out;
}

KalmanState update(const KalmanState& state, const Vec3& measured_position,
                   const NoiseParams& noise) {
  noise.validate();
  const Matrix36 h = observation_matrix();
  const Eigen::Matrix3d r =
      noise.sigma * noise.sigma * Eigen::Matrix3d::Identity();

  const Eigen::Matrix3d s = h * state.P * h.transpose() + r;
  Eigen::FullPivLU<Eigen::Matrix3d> lu(s);
  if (!lu.isInvertible()) throw SingularInnovation();

  const Eigen::Matrix<double, 6, 3> k = state.P * h.transpose() * lu.inverse();
  const Eigen::Vector3d innovation = measured_position.eigen() - h * state.x;

  KalmanState out;
  out.x = state.x + k * innovation;
  out.P = (Matrix6::Identity() - k * h) * state.P;
  out.P = 0.5 * (out.P + out.P.transpose());
  return out;
}

KalmanState step(const KalmanState& state, const Vec3& measured_position, double dt,
                 const NoiseParams& noise) {
  return update(predict(state, dt, noise), measured_position, noise);
}

}  // namespace arcas
