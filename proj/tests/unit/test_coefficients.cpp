#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "../support/expect_error.hpp"
#include "sympfd/coefficients.hpp"

using namespace sympfd;
using enum SweepDirection;

TEST(DiffusionCoeffs, ZeroIsIdentity) {
  for (auto v : {DiffusionVariant::Exponential, DiffusionVariant::SaulyevMatched}) {
    const auto u = diffusion_coeffs({0.0, v});
    EXPECT_EQ(u.alpha, 1.0);
    EXPECT_EQ(u.beta, 0.0);
    EXPECT_EQ(u.gamma(), 1.0);
  }
}

TEST(DiffusionCoeffs, ExponentialAtHalf) {
  const auto u = diffusion_coeffs({0.5, DiffusionVariant::Exponential});
  EXPECT_NEAR(u.gamma(), 0.36787944117144233, 1e-15);
  EXPECT_NEAR(u.alpha, 0.6839397205857212, 1e-15);
  EXPECT_NEAR(u.beta, 0.31606027941427883, 1e-15);
  EXPECT_EQ(u.beta, u.lambda);
}

TEST(DiffusionCoeffs, SaulyevMatchedAndHalfFlag) {
  const auto u = diffusion_coeffs({0.5, DiffusionVariant::SaulyevMatched});
  EXPECT_NEAR(u.gamma(), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(u.beta, 1.0 / 3.0, 1e-15);
  const auto h = diffusion_coeffs({1.0, DiffusionVariant::SaulyevMatched}, true);
  EXPECT_NEAR(h.gamma(), 1.0 / 3.0, 1e-15);
}

TEST(DiffusionCoeffs, NegativeRIsUnstable) {
  EXPECT_SOLVER_ERROR(diffusion_coeffs({-0.1, DiffusionVariant::Exponential}), ErrorKind::Stability);
}

TEST(DiffusionCoeffs, InvariantsAndMonotoneDamping) {
  double prev_exp = 1.0 + 1e-15;
  for (double r = 0.0; r <= 10.0; r += 0.25) {
    const auto e = diffusion_coeffs({r, DiffusionVariant::Exponential});
    const auto s = diffusion_coeffs({r, DiffusionVariant::SaulyevMatched});
    for (const auto& u : {e, s}) {
      EXPECT_EQ(u.beta, u.lambda);
      EXPECT_NEAR(u.alpha + u.beta, 1.0, 1e-14);
    }
    EXPECT_GT(e.gamma(), 0.0);
    EXPECT_LE(e.gamma(), 1.0 + 1e-15);
    EXPECT_LT(e.gamma(), prev_exp);
    prev_exp = e.gamma();
    EXPECT_GT(s.gamma(), -1.0);
    EXPECT_LE(s.gamma(), 1.0);
  }
}

TEST(AdvectionCoeffs, ZeroIsIdentity) {
  for (auto v : {AdvectionVariant::Trig, AdvectionVariant::Saulyev, AdvectionVariant::RobertsWeiss,
                 AdvectionVariant::MatchedCN}) {
    for (auto d : {Ascending, Descending}) {
      const auto u = advection_coeffs({0.0, v}, d);
      EXPECT_EQ(u.alpha, 1.0);
      EXPECT_EQ(u.beta, 0.0);
    }
  }
}

TEST(AdvectionCoeffs, DerivedValues) {
  EXPECT_NEAR(advection_coeffs({2.0, AdvectionVariant::MatchedCN}, Ascending).beta, std::sqrt(2.0) - 1.0, 1e-15);
  EXPECT_NEAR(advection_coeffs({0.8, AdvectionVariant::RobertsWeiss}, Ascending).beta, 0.2857142857142857, 1e-15);
  EXPECT_NEAR(advection_coeffs({0.8, AdvectionVariant::RobertsWeiss}, Descending).beta, 0.8 / 1.2, 1e-15);
  EXPECT_NEAR(advection_coeffs({0.7, AdvectionVariant::Trig}, Ascending, 2).beta, std::sin(0.175), 1e-16);
  EXPECT_NEAR(advection_coeffs({0.7, AdvectionVariant::Saulyev}, Ascending, 2).beta, 0.175, 1e-16);
}

TEST(AdvectionCoeffs, RotationInvariants) {
  for (double eta : {-3.0, -0.5, 0.1, 0.7, 1.5, 5.0, 80.0}) {
    const auto u = advection_coeffs({eta, AdvectionVariant::MatchedCN}, Ascending);
    EXPECT_EQ(u.lambda, -u.beta);
    EXPECT_NEAR(u.alpha * u.alpha + u.beta * u.beta, 1.0, 1e-14);
    EXPECT_NEAR(u.gamma(), 1.0, 1e-14);
  }
}

TEST(AdvectionCoeffs, SpatialAmplificationRejected) {
  EXPECT_SOLVER_ERROR(advection_coeffs({2.0, AdvectionVariant::Saulyev}, Ascending), ErrorKind::SpatialAmplification);
  EXPECT_SOLVER_ERROR(advection_coeffs({2.5, AdvectionVariant::Saulyev}, Ascending), ErrorKind::SpatialAmplification);
  EXPECT_SOLVER_ERROR(advection_coeffs({1.0, AdvectionVariant::RobertsWeiss}, Descending), ErrorKind::SpatialAmplification);
  EXPECT_SOLVER_ERROR(advection_coeffs({1.3, AdvectionVariant::RobertsWeiss}, Descending), ErrorKind::SpatialAmplification);
  EXPECT_SOLVER_ERROR(advection_coeffs({3.14159265358979, AdvectionVariant::Trig}, Ascending), ErrorKind::SpatialAmplification);
  EXPECT_NO_THROW(advection_coeffs({1.9, AdvectionVariant::RobertsWeiss}, Descending, 2));
}

TEST(MatchedCN, SeriesBranchIsContinuous) {
  const double eta = 1e-4;
  const double closed = eta / (2.0 * (std::sqrt(1.0 + eta * eta / 4.0) + 1.0));
  EXPECT_NEAR(matched_cn_s(eta), closed, 1e-20);
  EXPECT_NEAR(matched_cn_s(std::nextafter(eta, 0.0)), matched_cn_s(eta), 1e-12);
  EXPECT_NEAR(matched_cn_s(1e-8) / 1e-8, 0.25, 1e-12);
  EXPECT_EQ(matched_cn_s(0.0), 0.0);
  // The cancellation-free form equals the textbook expression at moderate eta.
  for (double e : {0.01, 0.3, 2.0, 10.0}) {
    EXPECT_NEAR(matched_cn_s(e), (2.0 / e) * (std::sqrt(1.0 + e * e / 4.0) - 1.0), 1e-14);
  }
}

TEST(Sinhc, SmoothThroughZero) {
  EXPECT_EQ(sinhc(0.0), 1.0);
  EXPECT_NEAR(sinhc(1e-4), std::sinh(1e-4) / 1e-4, 1e-15);
  EXPECT_NEAR(sinhc(0.5), std::sinh(0.5) / 0.5, 1e-15);
}

TEST(SplitDerived, ReferencePoint) {
  const auto u = advdiff_coeffs_split({0.5, 0.6, AdvDiffVariant::SplitDerived});
  EXPECT_NEAR(u.alpha, 0.6557035388882795, 1e-15);
  EXPECT_NEAR(u.beta, 0.49826775829536046, 1e-15);
  EXPECT_NEAR(u.lambda, 0.12456693957384012, 1e-15);
  EXPECT_NEAR(u.gamma(), std::exp(-1.0), 1e-9);
  // Not norm preserving.
  EXPECT_GT(std::abs(u.alpha + u.beta - 1.0), 0.1);
}

TEST(SplitDerived, ReducesToExponentialDiffusion) {
  for (double r : {0.1, 0.5, 3.0}) {
    const auto a = advdiff_coeffs_split({r, 0.0, AdvDiffVariant::SplitDerived});
    const auto d = diffusion_coeffs({r, DiffusionVariant::Exponential});
    EXPECT_NEAR(a.alpha, d.alpha, 1e-14);
    EXPECT_NEAR(a.beta, d.beta, 1e-14);
    EXPECT_NEAR(a.lambda, d.lambda, 1e-14);
  }
}

TEST(SplitDerived, DeterminantIdentityAllBranches) {
  for (double r = 0.0; r <= 5.0; r += 0.125) {
    for (double eta : {0.0, 0.5 * r, r, 2.0 * r, 2.0 * r + 0.3, 2.0 * r + 1e-6, 4.0 * r + 1.0}) {
      const auto u = advdiff_coeffs_split({r, eta, AdvDiffVariant::SplitDerived});
      EXPECT_NEAR(u.gamma(), std::exp(-2.0 * r), 1e-12) << "r=" << r << " eta=" << eta;
    }
  }
}

TEST(GeneralizedRW, IdentityAndDiffusionLimit) {
  for (auto d : {Ascending, Descending}) {
    const auto u = advdiff_coeffs_rw({0.0, 0.0, AdvDiffVariant::GeneralizedRW}, d);
    EXPECT_NEAR(u.alpha, 1.0, 1e-16);
    EXPECT_NEAR(u.beta, 0.0, 1e-16);
    EXPECT_NEAR(u.lambda, 0.0, 1e-16);
  }
  const auto u = advdiff_coeffs_rw({0.5, 0.0, AdvDiffVariant::GeneralizedRW}, Ascending);
  EXPECT_NEAR(u.gamma(), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(u.beta, 1.0 / 3.0, 1e-15);
}

TEST(GeneralizedRW, BoundaryWeightIdentities) {
  for (double r : {0.0, 0.033, 0.066, 0.2, 1.0, 5.0}) {
    for (double eta : {0.0, 0.1, 0.33, 0.66, 0.9}) {
      const auto a = advdiff_coeffs_rw({r, eta, AdvDiffVariant::GeneralizedRW}, Ascending);
      const auto b = advdiff_coeffs_rw({r, eta, AdvDiffVariant::GeneralizedRW}, Descending);
      EXPECT_NEAR(a.alpha / (1.0 - a.beta), std::sqrt(1.0 + eta), 1e-12);
      EXPECT_NEAR(b.alpha / (1.0 - b.lambda), std::sqrt(1.0 - eta), 1e-12);
      EXPECT_NEAR(a.beta + a.gamma() + a.lambda, 1.0, 1e-14);
      EXPECT_NEAR(b.beta + b.gamma() + b.lambda, 1.0, 1e-14);
    }
  }
}

TEST(GeneralizedRW, DescendingDenominatorRejected) {
  EXPECT_SOLVER_ERROR(advdiff_coeffs_rw({0.1, 1.0, AdvDiffVariant::GeneralizedRW}, Descending), ErrorKind::Parameter);
  EXPECT_SOLVER_ERROR(advdiff_coeffs_rw({0.1, 1.5, AdvDiffVariant::GeneralizedRW}, Descending), ErrorKind::Parameter);
  EXPECT_SOLVER_ERROR(advdiff_coeffs_rw({-0.1, 0.5, AdvDiffVariant::GeneralizedRW}, Ascending), ErrorKind::Stability);
}

TEST(GeneralizedRW, NegativeAlphaSquareRejected) {
  // Upstream-directed ascending sweep: gamma + beta*lambda = -8/49.
  AdvDiffParams p{1.0, -1.5, AdvDiffVariant::GeneralizedRW};
  EXPECT_SOLVER_ERROR(advdiff_coeffs_rw(p, Ascending), ErrorKind::InvalidCoefficient);
}

TEST(AD2C, Limits) {
  for (double eta : {0.1, 0.66, 2.0}) {
    const auto u = advdiff_coeffs_ad2c({0.0, eta, AdvDiffVariant::MatchedAD2C});
    const auto a = advection_coeffs({eta, AdvectionVariant::MatchedCN}, Ascending);
    EXPECT_NEAR(u.gamma(), 1.0, 1e-14);
    EXPECT_NEAR(u.beta, a.beta, 1e-15);
    EXPECT_NEAR(u.lambda, a.lambda, 1e-15);
    EXPECT_NEAR(u.alpha, a.alpha, 1e-14);
  }
  for (double r : {0.066, 1.0, 4.0}) {
    const auto u = advdiff_coeffs_ad2c({r, 0.0, AdvDiffVariant::MatchedAD2C});
    const auto d = diffusion_coeffs({r, DiffusionVariant::SaulyevMatched}, true);
    EXPECT_NEAR(u.alpha, d.alpha, 1e-15);
    EXPECT_NEAR(u.beta, d.beta, 1e-15);
    EXPECT_NEAR(u.lambda, d.lambda, 1e-15);
  }
}

TEST(AD2C, NormConditionAndHalfFlag) {
  for (double r : {0.0, 0.066, 1.33, 10.0}) {
    for (double eta : {0.0, 0.66, 2.0}) {
      const auto u = advdiff_coeffs_ad2c({r, eta, AdvDiffVariant::MatchedAD2C});
      EXPECT_NEAR(u.beta + u.gamma() + u.lambda, 1.0, 1e-14);
      const auto h = advdiff_coeffs_ad2c({r, eta, AdvDiffVariant::MatchedAD2C}, true);
      const auto q = advdiff_coeffs_ad2c({r / 2.0, eta / 2.0, AdvDiffVariant::MatchedAD2C});
      EXPECT_EQ(h.alpha, q.alpha);
      EXPECT_EQ(h.beta, q.beta);
    }
  }
}

TEST(RationalForm, DiffusionT2) {
  // g~ = 1 is the identity; Saul'yev g~ reproduces the D2S closed form.
  EXPECT_EQ(diffusion_t2_rational(1.0, 2.0), 1.0);
  const double r = 2.0, theta = 3.14159265358979323846;
  EXPECT_NEAR(diffusion_t2_rational(saulyev_gamma_tilde(r), theta), 1.0 / 9.0, 1e-15);
  EXPECT_NEAR(exponential_gamma_tilde(0.3), std::exp(-0.3), 1e-16);
}
