#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "sympfd/types.hpp"

namespace sympfd {

/// Uniform 1D grid function u_j sampled at x_j = x0 + j*dx, j = 0..N-1.
///
/// Construction validates N >= 3, a finite positive spacing and finite
/// samples. Steppers mutate the samples in place afterwards; an unstable
/// scheme may legitimately drive them to inf, which `all_finite()` detects.
class Field1D {
 public:
  Field1D(std::vector<double> values, double dx, double x0 = 0.0,
          BoundaryKind boundary = BoundaryKind::Periodic);

  std::size_t size() const noexcept { return values_.size(); }
  double dx() const noexcept { return dx_; }
  double x0() const noexcept { return x0_; }
  BoundaryKind boundary() const noexcept { return boundary_; }
  double x(std::size_t j) const noexcept { return x0_ + static_cast<double>(j) * dx_; }

  std::span<double> values() noexcept { return values_; }
  std::span<const double> values() const noexcept { return values_; }
  double& operator[](std::size_t j) { return values_[j]; }
  double operator[](std::size_t j) const { return values_[j]; }

  bool all_finite() const noexcept;

  /// Same geometry and boundary, new samples (validated like the constructor).
  Field1D with_values(std::vector<double> values) const;

 private:
  std::vector<double> values_;
  double dx_;
  double x0_;
  BoundaryKind boundary_;
};

Field1D gaussian_profile(std::size_t n, double x0, double dx, double center, double sigma);

/// exp[-((x - center)/2)^6]: steep but continuous pulse.
Field1D sextic_profile(std::size_t n, double x0, double dx, double center);

/// Plain sum of samples, accumulated left to right.
double norm(const Field1D& f);

/// sum |x_j| u_j / sum u_j.
double abs_moment(const Field1D& f);

/// sum x_j |u_j| / sum |u_j|.
double abs_weighted_mean(const Field1D& f);

/// sum x_j u_j / sum u_j.
double mean_position(const Field1D& f);

// Boundary corrections for the quantities conserved exactly by asymmetric
// sweeps on a periodic grid. Each conserved quantity has the form
// norm + (w - 1) * u_0, where the weight w depends on the sweep coefficients.

/// Advection sweep with c = sqrt(1 - s^2): w = c/(1-s) ascending, c/(1+s) descending.
struct AdvectionNormTag {
  double c;
  double s;
  SweepDirection direction;
};

/// Roberts-Weiss advection sweep: w = sqrt(1 + eta) ascending, sqrt(1 - eta) descending.
struct RobertsWeissNormTag {
  double eta;
  SweepDirection direction;
};

/// General advection-diffusion pair update: w = alpha/(1-beta) ascending,
/// alpha/(1-lambda) descending.
struct AdvDiffNormTag {
  double alpha;
  double beta;
  double lambda;
  SweepDirection direction;
};

using ModifiedNormTag = std::variant<AdvectionNormTag, RobertsWeissNormTag, AdvDiffNormTag>;

double boundary_weight(const ModifiedNormTag& tag);
double modified_norm(const Field1D& f, const ModifiedNormTag& tag);

}  // namespace sympfd
