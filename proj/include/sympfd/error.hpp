#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sympfd {

/// Classification of every failure the library reports. The CLI maps
/// `Usage` to exit code 2 and everything else to exit code 1.
enum class ErrorKind {
  Parameter,
  DegenerateInput,
  SingularCoefficient,
  Size,
  BoundaryKind,
  Stability,
  SpatialAmplification,
  InvalidCoefficient,
  Domain,
  Usage,
};

std::string_view to_string(ErrorKind kind) noexcept;

class SolverError : public std::runtime_error {
 public:
  SolverError(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& message);

}  // namespace sympfd
