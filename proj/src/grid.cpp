#include "sympfd/grid.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "sympfd/error.hpp"

namespace sympfd {

std::string_view to_string(Equation equation) noexcept {
  switch (equation) {
    case Equation::Diffusion: return "diffusion";
    case Equation::Advection: return "advection";
    case Equation::AdvDiff: return "advdiff";
  }
  return "?";
}

namespace {

void check_geometry(std::size_t n, double dx) {
  if (n < 3) raise(ErrorKind::Size, fmt::format("grid needs at least 3 samples, got {}", n));
  if (!(dx > 0.0) || !std::isfinite(dx)) {
    raise(ErrorKind::Parameter, fmt::format("grid spacing must be finite and positive, got {}", dx));
  }
}

template <typename Profile>
Field1D sample(std::size_t n, double x0, double dx, Profile&& profile) {
  check_geometry(n, dx);
  if (!std::isfinite(x0)) raise(ErrorKind::Parameter, "grid origin must be finite");
  std::vector<double> u(n);
  for (std::size_t j = 0; j < n; ++j) u[j] = profile(x0 + static_cast<double>(j) * dx);
  return Field1D(std::move(u), dx, x0);
}

}  // namespace

Field1D::Field1D(std::vector<double> values, double dx, double x0, BoundaryKind boundary)
    : values_(std::move(values)), dx_(dx), x0_(x0), boundary_(boundary) {
  check_geometry(values_.size(), dx_);
  if (!std::isfinite(x0_)) raise(ErrorKind::Parameter, "grid origin must be finite");
  if (!all_finite()) raise(ErrorKind::Parameter, "grid samples must be finite");
}

bool Field1D::all_finite() const noexcept {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); });
}

Field1D Field1D::with_values(std::vector<double> values) const {
  return Field1D(std::move(values), dx_, x0_, boundary_);
}

Field1D gaussian_profile(std::size_t n, double x0, double dx, double center, double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    raise(ErrorKind::Parameter, fmt::format("gaussian width must be positive, got {}", sigma));
  }
  const double inv = 1.0 / (2.0 * sigma * sigma);
  return sample(n, x0, dx, [&](double x) {
    const double d = x - center;
    return std::exp(-d * d * inv);
  });
}

Field1D sextic_profile(std::size_t n, double x0, double dx, double center) {
  return sample(n, x0, dx, [&](double x) {
    const double h = (x - center) / 2.0;
    const double h2 = h * h;
    return std::exp(-h2 * h2 * h2);
  });
}

double norm(const Field1D& f) {
  double sum = 0.0;
  for (double v : f.values()) sum += v;
  return sum;
}

double abs_moment(const Field1D& f) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j) {
    num += std::abs(f.x(j)) * f[j];
    den += f[j];
  }
  if (den == 0.0) raise(ErrorKind::DegenerateInput, "abs_moment of a field with zero norm");
  return num / den;
}

double abs_weighted_mean(const Field1D& f) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j) {
    const double a = std::abs(f[j]);
    num += f.x(j) * a;
    den += a;
  }
  if (den == 0.0) raise(ErrorKind::DegenerateInput, "abs_weighted_mean of an all-zero field");
  return num / den;
}

double mean_position(const Field1D& f) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j) {
    num += f.x(j) * f[j];
    den += f[j];
  }
  if (den == 0.0) raise(ErrorKind::DegenerateInput, "mean position of a field with zero norm");
  return num / den;
}

double boundary_weight(const ModifiedNormTag& tag) {
  auto ratio = [](double num, double den) {
    if (den == 0.0) raise(ErrorKind::SingularCoefficient, "modified-norm denominator vanishes");
    return num / den;
  };
  return std::visit(
      [&](const auto& t) -> double {
        using T = std::decay_t<decltype(t)>;
        const bool asc = t.direction == SweepDirection::Ascending;
        if constexpr (std::is_same_v<T, AdvectionNormTag>) {
          return ratio(t.c, asc ? 1.0 - t.s : 1.0 + t.s);
        } else if constexpr (std::is_same_v<T, RobertsWeissNormTag>) {
          const double arg = asc ? 1.0 + t.eta : 1.0 - t.eta;
          if (arg < 0.0) {
            raise(ErrorKind::Parameter, fmt::format("Roberts-Weiss norm weight undefined at eta = {}", t.eta));
          }
          return std::sqrt(arg);
        } else {
          return ratio(t.alpha, asc ? 1.0 - t.beta : 1.0 - t.lambda);
        }
      },
      tag);
}

double modified_norm(const Field1D& f, const ModifiedNormTag& tag) {
  return norm(f) + (boundary_weight(tag) - 1.0) * f[0];
}

}  // namespace sympfd
