#pragma once

#include <string_view>

namespace sympfd {

enum class BoundaryKind {
  Periodic,
  FixedEnds,  // first and last samples are held constant by every sweep
};

/// Order in which a sweep visits neighbour pairs.
///
/// Ascending (1A) visits (0,1), (1,2), ..., (N-2,N-1) and finally the wrap
/// pair (N-1,0). Descending (1B) visits the wrap pair first and then
/// (N-2,N-1), ..., (0,1).
enum class SweepDirection { Ascending, Descending };

enum class Equation { Diffusion, Advection, AdvDiff };

std::string_view to_string(Equation equation) noexcept;

}  // namespace sympfd
