#include "sympfd/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include <fmt/format.h>

#include "sympfd/error.hpp"

namespace sympfd {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Relative rounding floor below which |value - plateau| carries no signal.
constexpr double kNoiseFloor = 1e-13;

std::vector<std::complex<double>> twiddles(std::size_t n) {
  std::vector<std::complex<double>> w(n);
  for (std::size_t m = 0; m < n; ++m) w[m] = std::polar(1.0, kTwoPi * static_cast<double>(m) / static_cast<double>(n));
  return w;
}

struct SortedSeries {
  std::vector<double> dts;
  std::vector<double> values;
};

SortedSeries sort_descending(std::vector<double> dts, std::vector<double> values) {
  if (dts.size() != values.size()) raise(ErrorKind::Size, "dt and value sequences differ in length");
  std::vector<std::size_t> idx(dts.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return dts[a] > dts[b]; });
  SortedSeries s;
  for (auto i : idx) {
    s.dts.push_back(dts[i]);
    s.values.push_back(values[i]);
  }
  return s;
}

}  // namespace

CirculantSpectrum circulant_spectrum(std::size_t n, double dx, double D, double v) {
  if (n < 3) raise(ErrorKind::Size, "circulant spectrum needs N >= 3");
  if (!(dx > 0.0)) raise(ErrorKind::Parameter, "dx must be positive");
  CirculantSpectrum s{n, {}};
  s.eigenvalues.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    const double sn = std::sin(t);
    s.eigenvalues.emplace_back(-4.0 * D / (dx * dx) * sn * sn, -v / dx * std::sin(2.0 * t));
  }
  return s;
}

DenseMatrix diffusion_matrix(std::size_t n, double dx, double D) {
  DenseMatrix m(n, n);
  const double c = D / (dx * dx);
  for (std::size_t j = 0; j < n; ++j) {
    m(j, j) += -2.0 * c;
    m(j, (j + 1) % n) += c;
    m(j, (j + n - 1) % n) += c;
  }
  return m;
}

DenseMatrix advection_matrix(std::size_t n, double dx, double v) {
  DenseMatrix m(n, n);
  const double c = v / (2.0 * dx);
  for (std::size_t j = 0; j < n; ++j) {
    m(j, (j + 1) % n) += -c;
    m(j, (j + n - 1) % n) += c;
  }
  return m;
}

Field1D exact_evolve_dimensionless(const Field1D& f, double r, double eta) {
  if (f.boundary() != BoundaryKind::Periodic) raise(ErrorKind::BoundaryKind, "exact evolution needs a periodic field");
  if (!std::isfinite(r) || !std::isfinite(eta)) raise(ErrorKind::Parameter, "r and eta must be finite");
  const std::size_t n = f.size();
  const auto w = twiddles(n);
  const auto u = f.values();

  std::vector<std::complex<double>> spec(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::complex<double> acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += u[j] * std::conj(w[(j * k) % n]);
    const double t = std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    const double sn = std::sin(t);
    spec[k] = acc * std::exp(std::complex<double>(-4.0 * r * sn * sn, -eta * std::sin(2.0 * t)));
  }
  std::vector<double> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::complex<double> acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) acc += spec[k] * w[(j * k) % n];
    out[j] = acc.real() / static_cast<double>(n);
  }
  return f.with_values(std::move(out));
}

Field1D exact_evolve(const Field1D& f, double D, double v, double dt) {
  const double dx = f.dx();
  return exact_evolve_dimensionless(f, dt * D / (dx * dx), v * dt / dx);
}

OrderEstimate observed_order(const std::vector<ErrorPoint>& points) {
  OrderEstimate est;
  std::vector<ErrorPoint> usable;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    if (i > 0 && !(p.dt < points[i - 1].dt)) raise(ErrorKind::Parameter, "dt values must be strictly decreasing");
    if (!(p.dt > 0.0)) raise(ErrorKind::Parameter, "dt values must be positive");
    if (!(p.err > 0.0)) {
      est.warnings.push_back(fmt::format("dropped non-positive error {} at dt = {}", p.err, p.dt));
      continue;
    }
    usable.push_back(p);
  }
  if (usable.size() < 2) raise(ErrorKind::DegenerateInput, "need at least two positive errors to fit an order");

  const double n = static_cast<double>(usable.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (const auto& p : usable) {
    const double x = std::log(p.dt);
    const double y = std::log(p.err);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  est.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  for (std::size_t i = 0; i + 1 < usable.size(); ++i) {
    est.pairwise.push_back(std::log(usable[i].err / usable[i + 1].err) / std::log(usable[i].dt / usable[i + 1].dt));
  }
  est.points_used = usable.size();
  return est;
}

ConvergenceFit fit_convergence(std::vector<double> dts, std::vector<double> values, int nominal_order) {
  if (dts.size() < 3) raise(ErrorKind::DegenerateInput, "convergence fit needs at least three points");
  if (nominal_order < 1) raise(ErrorKind::Parameter, "nominal order must be >= 1");
  const auto s = sort_descending(std::move(dts), std::move(values));
  const std::size_t last = s.dts.size() - 1;
  const double h1 = s.dts[last - 1];
  const double h2 = s.dts[last];
  const double v1 = s.values[last - 1];
  const double v2 = s.values[last];
  ConvergenceFit fit;
  fit.plateau = v2 + (v2 - v1) / (std::pow(h1 / h2, nominal_order) - 1.0);

  // The smallest-dt point fixed the plateau, so it carries no independent error.
  const double floor = kNoiseFloor * std::max(1.0, std::abs(fit.plateau));
  std::vector<ErrorPoint> pts;
  for (std::size_t i = 0; i < last; ++i) {
    const double e = std::abs(s.values[i] - fit.plateau);
    pts.push_back({s.dts[i], e > floor ? e : 0.0});
  }
  fit.order = observed_order(pts);
  return fit;
}

OrderEstimate order_against(const std::vector<double>& dts, const std::vector<double>& values, double reference) {
  const auto s = sort_descending(dts, values);
  const double floor = kNoiseFloor * std::max(1.0, std::abs(reference));
  std::vector<ErrorPoint> pts;
  for (std::size_t i = 0; i < s.dts.size(); ++i) {
    const double e = std::abs(s.values[i] - reference);
    pts.push_back({s.dts[i], e > floor ? e : 0.0});
  }
  return observed_order(pts);
}

Field1D richardson_reference(const Field1D& f, const Scheme& scheme, const StepParams& params, int levels,
                             int nominal_order, int increment) {
  if (levels < 0) raise(ErrorKind::Parameter, "levels must be >= 0");
  if (nominal_order < 1 || increment < 1) raise(ErrorKind::Parameter, "orders must be >= 1");
  const std::size_t n = f.size();

  // table[m] holds the result of 2^m substeps.
  std::vector<std::vector<double>> table;
  for (int m = 0; m <= levels; ++m) {
    const double div = std::ldexp(1.0, m);
    Field1D g = f;
    Stepper(scheme, {params.r / div, params.eta / div}).advance(g, static_cast<std::size_t>(1) << m);
    table.emplace_back(g.values().begin(), g.values().end());
  }
  // Neville-style elimination of successive error orders.
  for (int col = 1; col <= levels; ++col) {
    const double ratio = std::ldexp(1.0, nominal_order + (col - 1) * increment);
    for (int m = levels; m >= col; --m) {
      for (std::size_t j = 0; j < n; ++j) table[m][j] += (table[m][j] - table[m - 1][j]) / (ratio - 1.0);
    }
  }
  return f.with_values(table[levels]);
}

}  // namespace sympfd
