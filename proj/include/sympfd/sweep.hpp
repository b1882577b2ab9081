#pragma once

#include <cstddef>
#include <span>

#include "sympfd/dense.hpp"
#include "sympfd/grid.hpp"
#include "sympfd/types.hpp"

namespace sympfd {

/// The 2x2 update applied to a neighbour pair (j, j+1):
///
///   u_j'     = alpha * u_j + lambda * u_{j+1}
///   u_{j+1}' = beta  * u_j + alpha  * u_{j+1}
///
/// Diffusion updates have lambda == beta and alpha + beta == 1; advection
/// updates are rotations with lambda == -beta and alpha^2 + beta^2 == 1.
struct PairUpdate {
  double alpha = 1.0;
  double beta = 0.0;
  double lambda = 0.0;

  /// Determinant alpha^2 - beta*lambda; the middle coefficient of the
  /// equivalent Saul'yev recurrence.
  constexpr double gamma() const noexcept { return alpha * alpha - beta * lambda; }

  static constexpr PairUpdate identity() noexcept { return {}; }
};

/// Sequential pair update over all N wrapped pairs of a periodic field.
void sweep(Field1D& f, const PairUpdate& update, SweepDirection direction);

/// Raw periodic kernel on contiguous samples; `u.size()` must be >= 3.
void sweep_periodic(std::span<double> u, const PairUpdate& update, SweepDirection direction);

/// Classic Saul'yev recurrence with fixed end samples:
///   Ascending:  u_j' = beta u_{j-1}' + gamma u_j + lambda u_{j+1}   (left to right)
///   Descending: u_j' = beta u_{j-1}  + gamma u_j + lambda u_{j+1}'  (right to left)
/// The recurrence has no starting value on a periodic grid, so periodic
/// fields are rejected.
void saulyev_sweep_fixed(Field1D& f, double gamma, double beta, double lambda,
                         SweepDirection direction);

void saulyev_sweep_fixed(std::span<double> u, double gamma, double beta, double lambda,
                         SweepDirection direction);

/// Dense N x N product of the embedded 2x2 factors in sweep order
/// (3 <= N <= 64).
DenseMatrix sweep_as_matrix(const PairUpdate& update, SweepDirection direction, std::size_t n);

}  // namespace sympfd
