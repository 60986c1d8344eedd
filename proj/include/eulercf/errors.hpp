#pragma once

#include <stdexcept>
#include <string>

namespace eulercf {

// Base class for all faults raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A documented precondition was violated at a call boundary.
struct PreconditionError : Error {
  using Error::Error;
};

// A canonical denominator (or a backward-evaluation level) vanished; `depth`
// names the offending truncation depth / nesting level.
struct DegenerateDepthError : Error {
  DegenerateDepthError(const std::string& what, unsigned depth_arg)
      : Error(what), depth(depth_arg) {}
  unsigned depth;
};

// Quadrature could not certify the requested tolerance. Carries the best
// value obtained and the error estimate that failed the bar.
struct ToleranceError : Error {
  ToleranceError(const std::string& what, double best_arg, double estimate_arg)
      : Error(what), best(best_arg), estimate(estimate_arg) {}
  double best;
  double estimate;
};

}  // namespace eulercf
