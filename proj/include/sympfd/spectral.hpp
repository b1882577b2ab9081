#pragma once

#include <complex>
#include <span>
#include <vector>

#include "sympfd/comparators.hpp"
#include "sympfd/composition.hpp"
#include "sympfd/scheme.hpp"

namespace sympfd {

/// One per-mode amplification factor g(theta) = exp(-h).
struct AmplificationSample {
  double theta = 0.0;
  std::complex<double> g = 1.0;
  double magnitude = 1.0;
  std::complex<double> exponent_h = 0.0;  // -log g (principal branch)
  double phase = 0.0;                     // -arg g (principal branch)
};

AmplificationSample make_sample(double theta, std::complex<double> g);

AmplificationSample exact_amplification(Equation equation, double r, double eta, double theta);
AmplificationSample scheme_amplification(const SchemeSpec& spec, double r, double eta, double theta);
AmplificationSample scheme_amplification(const Scheme& scheme, double r, double eta, double theta);
AmplificationSample comparator_amplification(Comparator c, double r, double eta, double theta);

/// -arg g(theta) made continuous in theta from 0 at theta = 0. Advection only.
double phase_angle(const Scheme& scheme, double eta, double theta);
double phase_angle(const SchemeSpec& spec, double eta, double theta);

/// Unwrapped phase at each requested theta (any order; each in [0, pi]).
std::vector<double> phase_curve(const Scheme& scheme, double eta, std::span<const double> thetas);

/// Runs the real stepper on cos/sin of theta*j and reads back g.
///
/// The wrap pair makes a periodic sweep slightly non-circulant near the seam,
/// so the mode is evolved on a longer periodic lattice (a multiple of N, so
/// theta stays a lattice mode) and g is read at the sample farthest from
/// the seam, where the disturbance has decayed below rounding.
AmplificationSample numeric_amplification(const Scheme& scheme, double r, double eta, double theta,
                                          std::size_t n);
AmplificationSample numeric_amplification(const SchemeSpec& spec, double r, double eta, double theta,
                                          std::size_t n);

// Small-theta structure, extracted by Richardson extrapolation of an even
// function of theta sampled at theta = 1e-2, 5e-3, 2.5e-3.

/// lim Re h(theta) / theta^2.
double exponent_theta2_coefficient(const Scheme& scheme, double r, double eta);
/// lim phase(theta) / theta.
double phase_slope_at_zero(const Scheme& scheme, double eta);
/// lim (phase(theta) - eta sin theta) / theta^3.
double phase_error_theta3_coefficient(const Scheme& scheme, double eta);

}  // namespace sympfd
