#pragma once

#include <stdexcept>
#include <string>

namespace arcas {

/// Base class for all recoverable arcas errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Target coincides with the observer; no direction is defined.
class ZeroRange : public Error {
 public:
  ZeroRange() : Error("target range is zero; bearing undefined") {}
};

/// Filter prediction requested with dt <= 0.
class NonPositiveDt : public Error {
 public:
  explicit NonPositiveDt(double dt)
      : Error("prediction step requires dt > 0, got " + std::to_string(dt)) {}
};

/// Innovation covariance is not invertible (degenerate measurement noise).
class SingularInnovation : public Error {
 public:
  SingularInnovation() : Error("innovation covariance is singular") {}
};

/// Point sets are collinear or coincident; rotation is unobservable.
class DegenerateGeometry : public Error {
 public:
  using Error::Error;
  DegenerateGeometry() : Error("degenerate point geometry: rotation unobservable") {}
};

/// Fewer paired samples than the solver minimum.
class TooFewSamples : public Error {
 public:
  explicit TooFewSamples(std::size_t n, std::size_t need)
      : Error("need at least " + std::to_string(need) + " paired samples, got " +
              std::to_string(n)) {}
};

/// Client asked to transform targets before calibration finished.
class NotCalibrated : public Error {
 public:
  NotCalibrated() : Error("no calibration transform available yet") {}
};

/// Calibration phase did not gather a usable sample set in time.
class CalibrationTimeout : public Error {
 public:
  using Error::Error;
  CalibrationTimeout() : Error("calibration did not converge within the time budget") {}
};

/// Agent is (near) stationary; TTC is undefined.
class NearZeroSpeed : public Error {
 public:
  NearZeroSpeed() : Error("agent speed below floor; TTC undefined") {}
};

/// Configuration value outside its documented range.
class InvalidConfig : public Error {
 public:
  using Error::Error;
};

/// Could not bind the requested listen address.
class BindFailure : public Error {
 public:
  using Error::Error;
};

/// Malformed wire or log line.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace arcas
