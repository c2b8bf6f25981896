#pragma once

#include <stdexcept>
#include <string>

namespace coapprox {

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ZeroVector : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ZeroFunctional : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// norm or gauge has no unique gradient at the queried point
struct NotSmooth : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotOnBoundary : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NoSmoothPoints : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateBody : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// a supplied selection map violates its contract (e.g. leaves the half-space)
struct SelectionInvalid : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SearchExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CertificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace coapprox
