#include "sympfd/comparators.hpp"

#include <cmath>
#include <vector>

#include "sympfd/error.hpp"

namespace sympfd {

namespace {

// Thomas algorithm for the constant tridiagonal system with diagonal d and
// off-diagonals e (both sides), right-hand side overwritten by the solution.
void solve_tridiagonal(double d, double e, std::span<double> rhs) {
  const std::size_t n = rhs.size();
  std::vector<double> c(n);
  double denom = d;
  c[0] = e / denom;
  rhs[0] /= denom;
  for (std::size_t i = 1; i < n; ++i) {
    denom = d - e * c[i - 1];
    c[i] = e / denom;
    rhs[i] = (rhs[i] - e * rhs[i - 1]) / denom;
  }
  for (std::size_t i = n - 1; i-- > 0;) rhs[i] -= c[i] * rhs[i + 1];
}

// Cyclic constant tridiagonal solve via Sherman-Morrison.
void solve_cyclic(double d, double e, std::span<double> rhs) {
  const std::size_t n = rhs.size();
  // A = T' + z v^T, where T' is tridiagonal with adjusted end diagonals and
  // z = (g, 0, ..., 0, e), v = (1, 0, ..., 0, e/g) carry the corner entries.
  const double g = -d;
  std::vector<double> z(n, 0.0);
  z[0] = g;
  z[n - 1] = e;
  std::vector<double> dd(n, d);
  dd[0] = d - g;
  dd[n - 1] = d - e * e / g;
  auto thomas = [&](std::vector<double>& x) {
    std::vector<double> c(n);
    double denom = dd[0];
    c[0] = e / denom;
    x[0] /= denom;
    for (std::size_t i = 1; i < n; ++i) {
      denom = dd[i] - e * c[i - 1];
      c[i] = e / denom;
      x[i] = (x[i] - e * x[i - 1]) / denom;
    }
    for (std::size_t i = n - 1; i-- > 0;) x[i] -= c[i] * x[i + 1];
  };
  std::vector<double> y(rhs.begin(), rhs.end());
  thomas(y);
  thomas(z);
  const double v_y = y[0] + e / g * y[n - 1];
  const double v_z = z[0] + e / g * z[n - 1];
  const double factor = v_y / (1.0 + v_z);
  for (std::size_t i = 0; i < n; ++i) rhs[i] = y[i] - factor * z[i];
}

}  // namespace

std::complex<double> comparator_factor(Comparator c, double r, double eta, double theta) {
  const double sn = std::sin(theta / 2.0);
  const double S = sn * sn;
  switch (c) {
    case Comparator::Euler:
      return 1.0 - 4.0 * r * S;
    case Comparator::CrankNicolson:
      return (1.0 - 2.0 * r * S) / (1.0 + 2.0 * r * S);
    case Comparator::LaxWendroff:
      return {1.0 - 2.0 * eta * eta * S, -eta * std::sin(theta)};
  }
  raise(ErrorKind::Parameter, "unknown comparator");
}

void euler_step(Field1D& f, double r) {
  auto u = f.values();
  const std::size_t n = u.size();
  std::vector<double> out(u.begin(), u.end());
  const bool periodic = f.boundary() == BoundaryKind::Periodic;
  const std::size_t lo = periodic ? 0 : 1;
  const std::size_t hi = periodic ? n : n - 1;
  for (std::size_t j = lo; j < hi; ++j) {
    const double left = u[(j + n - 1) % n];
    const double right = u[(j + 1) % n];
    out[j] = u[j] + r * (left - 2.0 * u[j] + right);
  }
  std::copy(out.begin(), out.end(), u.begin());
}

void crank_nicolson_step(Field1D& f, double r) {
  auto u = f.values();
  const std::size_t n = u.size();
  const double h = r / 2.0;
  std::vector<double> rhs(n);
  if (f.boundary() == BoundaryKind::Periodic) {
    for (std::size_t j = 0; j < n; ++j) rhs[j] = u[j] + h * (u[(j + n - 1) % n] - 2.0 * u[j] + u[(j + 1) % n]);
    solve_cyclic(1.0 + r, -h, rhs);
    std::copy(rhs.begin(), rhs.end(), u.begin());
    return;
  }
  // Fixed ends: interior system with the boundary values moved to the right side.
  std::vector<double> interior(n - 2);
  for (std::size_t j = 1; j + 1 < n; ++j) {
    interior[j - 1] = u[j] + h * (u[j - 1] - 2.0 * u[j] + u[j + 1]);
  }
  interior.front() += h * u[0];
  interior.back() += h * u[n - 1];
  solve_tridiagonal(1.0 + r, -h, interior);
  std::copy(interior.begin(), interior.end(), u.begin() + 1);
}

void lax_wendroff_step(Field1D& f, double eta) {
  auto u = f.values();
  const std::size_t n = u.size();
  std::vector<double> out(u.begin(), u.end());
  const bool periodic = f.boundary() == BoundaryKind::Periodic;
  const std::size_t lo = periodic ? 0 : 1;
  const std::size_t hi = periodic ? n : n - 1;
  for (std::size_t j = lo; j < hi; ++j) {
    const double left = u[(j + n - 1) % n];
    const double right = u[(j + 1) % n];
    out[j] = u[j] - eta / 2.0 * (right - left) + eta * eta / 2.0 * (right - 2.0 * u[j] + left);
  }
  std::copy(out.begin(), out.end(), u.begin());
}

void comparator_step(Field1D& f, Comparator c, double r, double eta) {
  switch (c) {
    case Comparator::Euler:
      euler_step(f, r);
      return;
    case Comparator::CrankNicolson:
      crank_nicolson_step(f, r);
      return;
    case Comparator::LaxWendroff:
      lax_wendroff_step(f, eta);
      return;
  }
}

}  // namespace sympfd
