#pragma once

#include "sympfd/sweep.hpp"
#include "sympfd/types.hpp"

namespace sympfd {

enum class DiffusionVariant {
  Exponential,     // gamma = exp(-2r)
  SaulyevMatched,  // gamma = (1-r)/(1+r)
};

enum class AdvectionVariant {
  Trig,          // s = sin(eta/2)
  Saulyev,       // s = eta/2
  RobertsWeiss,  // s = eta/(2+eta) ascending, eta/(2-eta) descending
  MatchedCN,     // s chosen so that the T2 factor equals Crank-Nicolson
};

enum class AdvDiffVariant {
  SplitDerived,   // exact exponential of the 2x2 pair generator
  GeneralizedRW,  // norm-preserving first-order sweeps
  MatchedAD2C,    // second order, matched to CN in both r and eta
};

/// r = dt*D/dx^2.
struct DiffusionParams {
  double r = 0.0;
  DiffusionVariant variant = DiffusionVariant::Exponential;
};

/// eta = v*dt/dx.
struct AdvectionParams {
  double eta = 0.0;
  AdvectionVariant variant = AdvectionVariant::Trig;
};

struct AdvDiffParams {
  double r = 0.0;
  double eta = 0.0;
  AdvDiffVariant variant = AdvDiffVariant::SplitDerived;
  // Accept r < 0. Only compositions with negative substeps set this.
  bool permit_backward = false;
};

/// Pair update for diffusion. `half` evaluates the update at r/2, the
/// coefficient set used inside a symmetric T2 step.
PairUpdate diffusion_coeffs(const DiffusionParams& p, bool half = false);

/// Pair update for advection at eta' = eta/half_divisor.
///
/// MatchedCN is defined directly in terms of the full-step eta: its s is the
/// half-step coefficient already, so T2 uses half_divisor = 1 for it.
PairUpdate advection_coeffs(const AdvectionParams& p, SweepDirection direction,
                            int half_divisor = 1);

PairUpdate advdiff_coeffs_split(const AdvDiffParams& p);
PairUpdate advdiff_coeffs_rw(const AdvDiffParams& p, SweepDirection direction);

/// AD2C pair update. The formula takes the full-step (r, eta) and yields the
/// update for one half-step sweep of T2 (the r/2 sits inside gamma). With
/// `half` the inputs are first scaled to (r/2, eta/2).
PairUpdate advdiff_coeffs_ad2c(const AdvDiffParams& p, bool half = false);

/// s~(eta) = (2/eta)(sqrt(1 + eta^2/4) - 1), evaluated without cancellation.
double matched_cn_s(double eta);

/// sinh(x)/x, smooth through 0.
double sinhc(double x);

// Unrestricted T2 damping factors g~ for the diffusion rational form.
// Valid for negative r too; used by reversal and oddness checks only.
double exponential_gamma_tilde(double r);
double saulyev_gamma_tilde(double r);

/// T2 diffusion amplification written through g~:
///   g2 = (1 - 4 b g~ / a^2 * S)/(1 + 4 b / a^2 * S),  S = sin^2(theta/2),
/// with a = (1 + g~)/2, b = (1 - g~)/2.
double diffusion_t2_rational(double gamma_tilde, double theta);

}  // namespace sympfd
