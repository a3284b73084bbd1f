#pragma once

#include <stdexcept>
#include <string>

namespace qrep {

/// Malformed input: bad shapes, schema violations, unknown vertices.
/// The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Dimension mismatch between matrices or objects. A kind of input error.
class ShapeError : public InputError {
 public:
  explicit ShapeError(const std::string& what) : InputError(what) {}
};

/// A well-formed request that has no mathematical answer within the
/// requested bounds (window exhaustion, resolution too short, ...).
/// The CLI maps this to exit code 1.
class MathError : public std::runtime_error {
 public:
  explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qrep
