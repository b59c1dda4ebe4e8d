#pragma once

#include <stdexcept>
#include <string>

namespace fracpoisson {

// Parameter outside the mathematical domain of an operation.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// No available evaluation regime reached the requested accuracy.
class AccuracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A simulation would exceed a configured size cap (path length, event count, record draws).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numerical Laplace inversion overflowed or produced non-finite output.
class InversionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A query beyond the horizon a realization was simulated for.
class HorizonError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace fracpoisson
