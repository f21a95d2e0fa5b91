#pragma once

#include <Eigen/Dense>

#include "arcas/geometry.hpp"

namespace arcas {

using Vector6 = Eigen::Matrix<double, 6, 1>;
using Matrix6 = Eigen::Matrix<double, 6, 6>;

/// Noise model of the constant-velocity tracker.
///
/// Per step the process covariance is Q = diag(lambda^2 x3, mu^2 x3) and the
/// measurement covariance is R = diag(sigma^2 x3). When scale_process_by_dt
/// is set, Q is additionally multiplied by dt (continuous-time style); the
/// default keeps the literal per-step diagonal.
struct NoiseParams {
  double lambda = 0.05;  // position process noise [m]
  double mu = 0.5;       // velocity process noise [m/s]
  double sigma = 0.05;   // measurement noise [m]
  bool scale_process_by_dt = false;

  void validate() const {
    if (!(lambda > 0.0) || !(mu > 0.0) || !(sigma > 0.0)) {
      throw InvalidConfig("noise parameters must be strictly positive");
    }
  }
};

/// Position + velocity estimate with covariance. State layout is
/// (x, y, z, vx, vy, vz).
struct KalmanState {
  Vector6 x = Vector6::Zero();
  Matrix6 P = Matrix6::Identity();

  Vec3 position() const { return {x(0), x(1), x(2)}; }
  Vec3 velocity() const { return {x(3), x(4), x(5)}; }
};

/// Timestamped position observation of one target.
struct Measurement {
  Vec3 position;
  double timestamp = 0.0;
};

/// Seeds a track from its first measurement: position from the measurement,
/// velocity zero, covariance diag(sigma^2 x3, max_speed^2 x3). The wide
/// velocity prior avoids startup bias.
KalmanState initial_state(const Vec3& first_measurement, const NoiseParams& noise,
                          double max_speed = 10.0);

/// Constant-velocity prediction over dt seconds. Throws NonPositiveDt.
KalmanState predict(const KalmanState& state, double dt, const NoiseParams& noise);

/// Measurement update with H = [I3 | 0]. Throws SingularInnovation when the
/// innovation covariance cannot be inverted (impossible for sigma > 0).
KalmanState update(const KalmanState& state, const Vec3& measured_position,
                   const NoiseParams& noise);

/// predict followed by update.
KalmanState step(const KalmanState& state, const Vec3& measured_position, double dt,
                 const NoiseParams& noise);

}  // namespace arcas
