#pragma once

#include <stdexcept>
#include <string>

namespace qwalk {

/// Bloch vector requested at a point where the quasi-energy gap is closed
/// and the axis of rotation is undefined.
class DegeneratePointError : public std::runtime_error {
 public:
  explicit DegeneratePointError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Path enumeration asked for more steps than the 2^N budget allows.
class UnsupportedSizeError : public std::invalid_argument {
 public:
  explicit UnsupportedSizeError(const std::string& what)
      : std::invalid_argument(what) {}
};

/// Two gap-closing events could not be separated at the requested scan
/// resolution; rerun with more samples.
class ResolutionError : public std::runtime_error {
 public:
  explicit ResolutionError(const std::string& what)
      : std::runtime_error(what) {}
};

/// A histogram contained no usable signal after background subtraction.
class NoSignalError : public std::runtime_error {
 public:
  explicit NoSignalError(const std::string& what)
      : std::runtime_error(what) {}
};

/// A distribution with fewer than two occupied sites cannot support the
/// adaptive outer/inner peak search.
class DegenerateDistributionError : public std::runtime_error {
 public:
  explicit DegenerateDistributionError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace qwalk
