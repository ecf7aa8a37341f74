#pragma once

#include <stdexcept>
#include <string>

namespace sigrec {

/// Evaluation produced a non-finite value (typically overflow of a nested
/// exponential). Carries the offending component index when known.
class numeric_overflow_error : public std::runtime_error {
public:
  explicit numeric_overflow_error(const std::string& what, int component = -1)
      : std::runtime_error(what), component_(component) {}
  int component() const noexcept { return component_; }

private:
  int component_;
};

/// A derivative of higher order than the configured jet cap was requested.
class unsupported_order_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A linear system required for reconstruction is numerically rank-deficient.
class singular_system_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace sigrec
