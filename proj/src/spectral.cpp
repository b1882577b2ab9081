#include "sympfd/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include <fmt/format.h>

#include "sympfd/error.hpp"

namespace sympfd {

namespace {

constexpr double kPi = std::numbers::pi;

void check_theta(double theta) {
  if (!(theta >= 0.0 && theta <= kPi)) raise(ErrorKind::Parameter, fmt::format("theta = {} outside [0, pi]", theta));
}

double limit_even(const std::function<double(double)>& f) {
  const double t = 1e-2;
  const double f0 = f(t);
  const double f1 = f(t / 2.0);
  const double f2 = f(t / 4.0);
  const double r1 = (4.0 * f1 - f0) / 3.0;
  const double r1h = (4.0 * f2 - f1) / 3.0;
  return (16.0 * r1h - r1) / 15.0;
}

}  // namespace

AmplificationSample make_sample(double theta, std::complex<double> g) {
  AmplificationSample s;
  s.theta = theta;
  s.g = g;
  s.magnitude = std::abs(g);
  if (s.magnitude > 0.0) {
    s.exponent_h = -std::log(g);
    s.phase = -std::arg(g);
  } else {
    s.exponent_h = {std::numeric_limits<double>::infinity(), 0.0};
    s.phase = 0.0;
  }
  return s;
}

AmplificationSample exact_amplification(Equation equation, double r, double eta, double theta) {
  check_theta(theta);
  const double sn = std::sin(theta / 2.0);
  const double decay = equation == Equation::Advection ? 0.0 : -4.0 * r * sn * sn;
  const double shift = equation == Equation::Diffusion ? 0.0 : -eta * std::sin(theta);
  return make_sample(theta, std::exp(std::complex<double>(decay, shift)));
}

AmplificationSample scheme_amplification(const SchemeSpec& spec, double r, double eta, double theta) {
  check_theta(theta);
  return make_sample(theta, compile(spec, {r, eta}).factor(theta));
}

AmplificationSample scheme_amplification(const Scheme& scheme, double r, double eta, double theta) {
  check_theta(theta);
  return make_sample(theta, Stepper(scheme, {r, eta}).factor(theta));
}

AmplificationSample comparator_amplification(Comparator c, double r, double eta, double theta) {
  check_theta(theta);
  return make_sample(theta, comparator_factor(c, r, eta, theta));
}

std::vector<double> phase_curve(const Scheme& scheme, double eta, std::span<const double> thetas) {
  if (scheme.equation != Equation::Advection) raise(ErrorKind::Domain, "phase angles are defined for advection schemes only");
  for (double t : thetas) check_theta(t);
  if (std::holds_alternative<ExactSemiDiscrete>(scheme.body) && scheme.substeps == 1) {
    std::vector<double> exact(thetas.size());
    for (std::size_t i = 0; i < exact.size(); ++i) exact[i] = eta * std::sin(thetas[i]);
    return exact;
  }
  const Stepper stepper(scheme, {0.0, eta});
  const double max_step = kPi / 1024.0;

  std::vector<std::size_t> order(thetas.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return thetas[a] < thetas[b]; });

  std::vector<double> out(thetas.size(), 0.0);
  double theta = 0.0;
  double phase = 0.0;  // unwrapped phase at `theta`
  for (auto i : order) {
    const double target = thetas[i];
    const int steps = static_cast<int>(std::ceil((target - theta) / max_step));
    const double start = theta;
    for (int k = 1; k <= steps; ++k) {
      const double t = k == steps ? target : start + (target - start) * k / steps;
      const double raw = -std::arg(stepper.factor(t));
      phase += std::remainder(raw - phase, 2.0 * kPi);
      theta = t;
    }
    out[i] = phase;
  }
  return out;
}

double phase_angle(const Scheme& scheme, double eta, double theta) {
  const double t[] = {theta};
  return phase_curve(scheme, eta, t).front();
}

double phase_angle(const SchemeSpec& spec, double eta, double theta) {
  return phase_angle(scheme_from_spec(spec), eta, theta);
}

AmplificationSample numeric_amplification(const Scheme& scheme, double r, double eta, double theta, std::size_t n) {
  check_theta(theta);
  if (n < 3) raise(ErrorKind::Size, "numeric amplification needs N >= 3");
  const double m = theta * static_cast<double>(n) / (2.0 * kPi);
  const double mode = std::round(m);
  if (std::abs(m - mode) > 1e-9 * std::max(1.0, m)) {
    raise(ErrorKind::Parameter, fmt::format("theta = {} is not a lattice mode 2 pi m / {}", theta, n));
  }
  const Stepper stepper(scheme, {r, eta});

  std::size_t length = n;
  const double rho = stepper.propagation_rate();
  if (rho >= 1.0) raise(ErrorKind::SpatialAmplification, "sweep disturbances do not decay");
  if (rho > 0.0) {
    // Each sweep spreads a seam disturbance by a factor rho per site; keep the
    // read-out point far enough that it falls below 1e-22.
    const double reach = std::ceil(std::log(1e-22) / std::log(rho));
    const double half_width = 2.0 * reach + 8.0 * static_cast<double>(stepper.sweep_count());
    const std::size_t needed = static_cast<std::size_t>(2.0 * half_width) + 2;
    const std::size_t k = (needed + n - 1) / n;
    length = n * std::max<std::size_t>(k, 1);
    if (length > (std::size_t{1} << 20)) {
      raise(ErrorKind::Size, fmt::format("propagation rate {} needs an oversized lattice", rho));
    }
  }
  // Exact integer phases: theta * j = 2 pi ((m K j) mod L) / L.
  const auto wave = static_cast<std::size_t>(mode) * (length / n);
  auto angle = [&](std::size_t j) {
    return 2.0 * kPi * static_cast<double>((wave * j) % length) / static_cast<double>(length);
  };
  std::vector<double> re(length), im(length);
  for (std::size_t j = 0; j < length; ++j) {
    re[j] = std::cos(angle(j));
    im[j] = std::sin(angle(j));
  }
  Field1D fr(std::move(re), 1.0);
  Field1D fi(std::move(im), 1.0);
  stepper.advance(fr);
  stepper.advance(fi);
  const std::size_t c = length / 2;
  const std::complex<double> out(fr[c], fi[c]);
  const std::complex<double> in = std::polar(1.0, angle(c));
  return make_sample(theta, out / in);
}

AmplificationSample numeric_amplification(const SchemeSpec& spec, double r, double eta, double theta, std::size_t n) {
  return numeric_amplification(scheme_from_spec(spec), r, eta, theta, n);
}

double exponent_theta2_coefficient(const Scheme& scheme, double r, double eta) {
  const Stepper stepper(scheme, {r, eta});
  return limit_even([&](double t) { return -std::log(std::abs(stepper.factor(t))) / (t * t); });
}

double phase_slope_at_zero(const Scheme& scheme, double eta) {
  if (scheme.equation != Equation::Advection) raise(ErrorKind::Domain, "phase slope needs an advection scheme");
  const Stepper stepper(scheme, {0.0, eta});
  return limit_even([&](double t) { return -std::arg(stepper.factor(t)) / t; });
}

double phase_error_theta3_coefficient(const Scheme& scheme, double eta) {
  if (scheme.equation != Equation::Advection) raise(ErrorKind::Domain, "phase error needs an advection scheme");
  const Stepper stepper(scheme, {0.0, eta});
  return limit_even([&](double t) { return (-std::arg(stepper.factor(t)) - eta * std::sin(t)) / (t * t * t); });
}

}  // namespace sympfd
