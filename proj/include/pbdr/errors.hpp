#pragma once

#include <stdexcept>
#include <string>

namespace pbdr {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

//! Non-invertible / orientation-degenerate configuration (e.g. collapsed body).
struct DegenerateConfigError : Error {
  explicit DegenerateConfigError(const std::string& msg) : Error(msg) {}
};

//! Singular or near-singular symmetric matrix; carries the offending axis.
struct RankDeficientError : Error {
  RankDeficientError(const std::string& msg, double ax, double ay, double az)
      : Error(msg), axis_x(ax), axis_y(ay), axis_z(az) {}
  double axis_x, axis_y, axis_z;
};

struct EmptyPackingError : Error {
  explicit EmptyPackingError(const std::string& msg) : Error(msg) {}
};

struct InvalidMomentError : Error {
  explicit InvalidMomentError(const std::string& msg) : Error(msg) {}
};

//! Configuration / CLI validation failure; carries the offending key path.
struct ConfigError : Error {
  ConfigError(const std::string& key, const std::string& msg)
      : Error("config key '" + key + "': " + msg), key_path(key) {}
  std::string key_path;
};

//! Runtime simulation failure with the frame index attached.
struct SimulationError : Error {
  SimulationError(const std::string& msg, long frame)
      : Error(msg + " (frame " + std::to_string(frame) + ")"), frame_index(frame) {}
  long frame_index;
};

}  // namespace pbdr
