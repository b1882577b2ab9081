#include "sympfd/coefficients.hpp"

#include <cmath>

#include <fmt/format.h>

#include "sympfd/error.hpp"

namespace sympfd {

namespace {

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) raise(ErrorKind::Parameter, fmt::format("{} must be finite", what));
}

void require_nonnegative_r(double r) {
  require_finite(r, "r");
  if (r < 0.0) {
    raise(ErrorKind::Stability, fmt::format("negative diffusion number r = {} is unconditionally unstable", r));
  }
}

PairUpdate rotation(double s) {
  if (!(std::abs(s) < 1.0)) {
    raise(ErrorKind::SpatialAmplification, fmt::format("|s| = {} >= 1 amplifies along the sweep", std::abs(s)));
  }
  const double c = std::sqrt((1.0 - s) * (1.0 + s));
  return {c, s, -s};
}

// cosh(psi) and sinh(psi)/psi given psi^2, continued to cos/sinc for psi^2 < 0.
struct HyperPair {
  double cosh;
  double sinhc;
};

HyperPair hyper_from_square(double psi2) {
  const double a = std::sqrt(std::abs(psi2));
  if (a < 1e-4) {
    return {1.0 + psi2 / 2.0 + psi2 * psi2 / 24.0, 1.0 + psi2 / 6.0 + psi2 * psi2 / 120.0};
  }
  if (psi2 >= 0.0) return {std::cosh(a), std::sinh(a) / a};
  return {std::cos(a), std::sin(a) / a};
}

double alpha_from_norm_condition(double gamma, double beta, double lambda) {
  const double arg = gamma + beta * lambda;
  if (!(arg >= 0.0)) {
    raise(ErrorKind::InvalidCoefficient, fmt::format("gamma + beta*lambda = {} < 0 has no real alpha", arg));
  }
  return std::sqrt(arg);
}

}  // namespace

double sinhc(double x) { return hyper_from_square(x * x).sinhc; }

double matched_cn_s(double eta) {
  require_finite(eta, "eta");
  if (std::abs(eta) < 1e-4) {
    const double e2 = eta * eta;
    return eta * (0.25 - e2 / 64.0 + e2 * e2 / 512.0);
  }
  return eta / (2.0 * (std::sqrt(1.0 + eta * eta / 4.0) + 1.0));
}

PairUpdate diffusion_coeffs(const DiffusionParams& p, bool half) {
  require_nonnegative_r(p.r);
  const double r = half ? p.r / 2.0 : p.r;
  double gamma = 1.0;
  double beta = 0.0;
  switch (p.variant) {
    case DiffusionVariant::Exponential:
      gamma = std::exp(-2.0 * r);
      beta = -std::expm1(-2.0 * r) / 2.0;
      break;
    case DiffusionVariant::SaulyevMatched:
      gamma = (1.0 - r) / (1.0 + r);
      beta = r / (1.0 + r);
      break;
  }
  return {(1.0 + gamma) / 2.0, beta, beta};
}

PairUpdate advection_coeffs(const AdvectionParams& p, SweepDirection direction, int half_divisor) {
  require_finite(p.eta, "eta");
  if (half_divisor < 1) raise(ErrorKind::Parameter, "half_divisor must be >= 1");
  const double eta = p.eta / half_divisor;
  switch (p.variant) {
    case AdvectionVariant::Trig:
      return rotation(std::sin(eta / 2.0));
    case AdvectionVariant::Saulyev: {
      const double s = eta / 2.0;
      if (std::abs(s) == 1.0) {
        raise(ErrorKind::SpatialAmplification, "Saul'yev advection with |s| = 1 is pathological");
      }
      return rotation(s);
    }
    case AdvectionVariant::RobertsWeiss:
      if (direction == SweepDirection::Ascending) {
        if (eta == -2.0) raise(ErrorKind::SingularCoefficient, "RW ascending singular at eta = -2");
        return rotation(eta / (2.0 + eta));
      }
      if (eta >= 1.0) {
        raise(ErrorKind::SpatialAmplification,
              fmt::format("RW descending sweep needs eta < 1, got {}", eta));
      }
      return rotation(eta / (2.0 - eta));
    case AdvectionVariant::MatchedCN:
      return rotation(matched_cn_s(eta));
  }
  raise(ErrorKind::Parameter, "unknown advection variant");
}

PairUpdate advdiff_coeffs_split(const AdvDiffParams& p) {
  if (!p.permit_backward) require_nonnegative_r(p.r);
  require_finite(p.r, "r");
  require_finite(p.eta, "eta");
  const double h = p.eta / 2.0;
  const auto hp = hyper_from_square(p.r * p.r - h * h);
  const double damp = std::exp(-p.r);
  return {damp * hp.cosh, damp * (p.r + h) * hp.sinhc, damp * (p.r - h) * hp.sinhc};
}

PairUpdate advdiff_coeffs_rw(const AdvDiffParams& p, SweepDirection direction) {
  if (!p.permit_backward) require_nonnegative_r(p.r);
  require_finite(p.r, "r");
  require_finite(p.eta, "eta");
  const double eta = p.eta;
  double gamma = 1.0;
  double beta = 0.0;
  if (direction == SweepDirection::Ascending) {
    const double d = 2.0 + eta * (3.0 + eta);
    if (d == 0.0 || 2.0 + eta == 0.0) raise(ErrorKind::Parameter, "generalized RW ascending denominator vanishes");
    const double w = 2.0 / d;
    gamma = (1.0 - w * p.r) / (1.0 + w * p.r);
    beta = (1.0 - gamma + eta) / (2.0 + eta);
  } else {
    const double d = 2.0 - eta * (3.0 - eta);
    if (!(d > 0.0)) {
      raise(ErrorKind::Parameter, fmt::format("generalized RW descending needs 2 - eta(3 - eta) > 0, eta = {}", eta));
    }
    const double w = 2.0 / d;
    gamma = (1.0 - w * p.r) / (1.0 + w * p.r);
    beta = (1.0 - gamma + gamma * eta) / (2.0 - eta);
  }
  const double lambda = 1.0 - gamma - beta;
  return {alpha_from_norm_condition(gamma, beta, lambda), beta, lambda};
}

PairUpdate advdiff_coeffs_ad2c(const AdvDiffParams& p, bool half) {
  if (!p.permit_backward) require_nonnegative_r(p.r);
  require_finite(p.r, "r");
  require_finite(p.eta, "eta");
  const double r = half ? p.r / 2.0 : p.r;
  const double eta = half ? p.eta / 2.0 : p.eta;
  const double s = matched_cn_s(eta);
  const double s2 = s * s;
  const double w = (1.0 - s2) * (1.0 - s2) / (1.0 + 3.0 * s2);
  const double gamma = (1.0 - w * r / 2.0) / (1.0 + w * r / 2.0);
  const double beta = (1.0 - gamma) / 2.0 + (1.0 + gamma) * s / 2.0;
  const double lambda = 1.0 - gamma - beta;
  return {alpha_from_norm_condition(gamma, beta, lambda), beta, lambda};
}

double exponential_gamma_tilde(double r) { return std::exp(-r); }

double saulyev_gamma_tilde(double r) { return (1.0 - r / 2.0) / (1.0 + r / 2.0); }

double diffusion_t2_rational(double gamma_tilde, double theta) {
  const double a = (1.0 + gamma_tilde) / 2.0;
  const double b = (1.0 - gamma_tilde) / 2.0;
  const double sn = std::sin(theta / 2.0);
  const double S = sn * sn;
  return (1.0 - 4.0 * b * gamma_tilde / (a * a) * S) / (1.0 + 4.0 * b / (a * a) * S);
}

}  // namespace sympfd
