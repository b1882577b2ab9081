#include "sympfd/sweep.hpp"

#include <fmt/format.h>

#include "sympfd/error.hpp"

namespace sympfd {

void sweep_periodic(std::span<double> u, const PairUpdate& update, SweepDirection direction) {
  const std::size_t n = u.size();
  if (n < 3) raise(ErrorKind::Size, fmt::format("periodic sweep needs N >= 3, got {}", n));
  const double a = update.alpha;
  const double b = update.beta;
  const double l = update.lambda;

  if (direction == SweepDirection::Ascending) {
    // `carry` holds the once-updated value of u_j entering pair (j, j+1).
    double carry = u[0];
    for (std::size_t j = 0; j + 1 < n; ++j) {
      const double next = u[j + 1];
      u[j] = a * carry + l * next;
      carry = b * carry + a * next;
    }
    // Wrap pair (N-1, 0); u[0] still holds its first update.
    const double first = u[0];
    u[n - 1] = a * carry + l * first;
    u[0] = b * carry + a * first;
  } else {
    const double last = u[n - 1];
    const double first = u[0];
    u[0] = b * last + a * first;
    // `carry` holds the once-updated value of u_{j+1} entering pair (j, j+1).
    double carry = a * last + l * first;
    for (std::size_t j = n - 1; j-- > 0;) {
      const double x = u[j];
      u[j + 1] = b * x + a * carry;
      carry = a * x + l * carry;
    }
    u[0] = carry;
  }
}

void sweep(Field1D& f, const PairUpdate& update, SweepDirection direction) {
  if (f.boundary() != BoundaryKind::Periodic) {
    raise(ErrorKind::BoundaryKind, "pair-update sweep requires a periodic field; use saulyev_sweep_fixed");
  }
  sweep_periodic(f.values(), update, direction);
}

void saulyev_sweep_fixed(std::span<double> u, double gamma, double beta, double lambda,
                         SweepDirection direction) {
  const std::size_t n = u.size();
  if (n < 3) raise(ErrorKind::Size, fmt::format("fixed-end sweep needs N >= 3, got {}", n));
  if (direction == SweepDirection::Ascending) {
    for (std::size_t j = 1; j + 1 < n; ++j) u[j] = beta * u[j - 1] + gamma * u[j] + lambda * u[j + 1];
  } else {
    for (std::size_t j = n - 2; j >= 1; --j) u[j] = beta * u[j - 1] + gamma * u[j] + lambda * u[j + 1];
  }
}

void saulyev_sweep_fixed(Field1D& f, double gamma, double beta, double lambda,
                         SweepDirection direction) {
  if (f.boundary() != BoundaryKind::FixedEnds) {
    raise(ErrorKind::BoundaryKind, "the Saul'yev recurrence cannot be started on a periodic grid");
  }
  saulyev_sweep_fixed(f.values(), gamma, beta, lambda, direction);
}

DenseMatrix sweep_as_matrix(const PairUpdate& update, SweepDirection direction, std::size_t n) {
  if (n < 3 || n > 64) raise(ErrorKind::Size, fmt::format("oracle matrix size must be in [3, 64], got {}", n));
  DenseMatrix m = DenseMatrix::identity(n);
  // Left-multiplying by an embedded factor mixes rows j and k.
  auto apply_factor = [&](std::size_t j, std::size_t k) {
    for (std::size_t c = 0; c < n; ++c) {
      const double rj = m(j, c);
      const double rk = m(k, c);
      m(j, c) = update.alpha * rj + update.lambda * rk;
      m(k, c) = update.beta * rj + update.alpha * rk;
    }
  };
  if (direction == SweepDirection::Ascending) {
    for (std::size_t j = 0; j + 1 < n; ++j) apply_factor(j, j + 1);
    apply_factor(n - 1, 0);
  } else {
    apply_factor(n - 1, 0);
    for (std::size_t j = n - 1; j-- > 0;) apply_factor(j, j + 1);
  }
  return m;
}

}  // namespace sympfd
