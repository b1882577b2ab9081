#pragma once

#include <complex>
#include <string>
#include <vector>

#include "sympfd/dense.hpp"
#include "sympfd/grid.hpp"
#include "sympfd/scheme.hpp"

namespace sympfd {

/// Eigenvalues of the periodic central-difference operator
/// D d2/dx2 - v d/dx on N points: lambda_k = -(4D/dx^2) sin^2(pi k/N) - i (v/dx) sin(2 pi k/N).
struct CirculantSpectrum {
  std::size_t n = 0;
  std::vector<std::complex<double>> eigenvalues;
};

CirculantSpectrum circulant_spectrum(std::size_t n, double dx, double D, double v);

/// (D/dx^2) * circulant tridiag(1, -2, 1).
DenseMatrix diffusion_matrix(std::size_t n, double dx, double D);
/// -(v/(2 dx)) * circulant (u_{j+1} - u_{j-1}).
DenseMatrix advection_matrix(std::size_t n, double dx, double v);

/// exp(dt (A + B)) applied to a periodic field by direct DFT.
Field1D exact_evolve(const Field1D& f, double D, double v, double dt);

/// Same, in terms of r = dt D/dx^2 and eta = v dt/dx.
Field1D exact_evolve_dimensionless(const Field1D& f, double r, double eta);

struct OrderEstimate {
  double slope = 0.0;                // least-squares slope of log err vs log dt
  std::vector<double> pairwise;      // order between consecutive points
  std::size_t points_used = 0;
  std::vector<std::string> warnings;
};

struct ErrorPoint {
  double dt;
  double err;
};

/// Points must have strictly decreasing dt. Non-positive errors are dropped
/// with a warning; fewer than two usable points raise DegenerateInput.
OrderEstimate observed_order(const std::vector<ErrorPoint>& points);

struct ConvergenceFit {
  double plateau = 0.0;  // extrapolated dt -> 0 value
  OrderEstimate order;
};

/// Model value(dt) = a + b dt^n. The plateau a is Richardson-extrapolated
/// from the two smallest steps with the nominal order; the order is then fitted
/// to |value - a| over the remaining points above the rounding floor.
ConvergenceFit fit_convergence(std::vector<double> dts, std::vector<double> values, int nominal_order);

/// Order fitted to |value - reference| over all points above the rounding floor.
OrderEstimate order_against(const std::vector<double>& dts, const std::vector<double>& values,
                            double reference);

/// One step of `scheme` at `params`, refined as 2^m substeps for m = 0..levels
/// and Richardson-extrapolated assuming error orders p, p + increment, ...
Field1D richardson_reference(const Field1D& f, const Scheme& scheme, const StepParams& params,
                             int levels, int nominal_order = 2, int increment = 2);

}  // namespace sympfd
