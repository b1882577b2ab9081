#include "sympfd/error.hpp"

#include <fmt/format.h>

namespace sympfd {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Parameter: return "parameter error";
    case ErrorKind::DegenerateInput: return "degenerate input";
    case ErrorKind::SingularCoefficient: return "singular coefficient";
    case ErrorKind::Size: return "size error";
    case ErrorKind::BoundaryKind: return "boundary-kind error";
    case ErrorKind::Stability: return "stability error";
    case ErrorKind::SpatialAmplification: return "spatial amplification";
    case ErrorKind::InvalidCoefficient: return "invalid coefficient";
    case ErrorKind::Domain: return "domain error";
    case ErrorKind::Usage: return "usage error";
  }
  return "error";
}

SolverError::SolverError(ErrorKind kind, const std::string& message)
    : std::runtime_error(fmt::format("{}: {}", to_string(kind), message)),
      kind_(kind) {}

void raise(ErrorKind kind, const std::string& message) {
  throw SolverError(kind, message);
}

}  // namespace sympfd
