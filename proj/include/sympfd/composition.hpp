#pragma once

#include <complex>
#include <string>
#include <variant>
#include <vector>

#include "sympfd/coefficients.hpp"
#include "sympfd/grid.hpp"
#include "sympfd/sweep.hpp"
#include "sympfd/types.hpp"

namespace sympfd {

enum class Base { Sweep1A, Sweep1B, T2 };

/// T2n = prod_i T2(a_i dt), applied right to left over the list.
struct SingleProduct {
  std::vector<double> a;
};

struct MultiProductTerm {
  double c;
  int k;
};

/// T2n = sum_k c_k T2(dt/k)^k.
struct MultiProduct {
  std::vector<MultiProductTerm> terms;
};

using CompositionPlan = std::variant<std::monostate, SingleProduct, MultiProduct>;

using CoefficientVariant = std::variant<DiffusionVariant, AdvectionVariant, AdvDiffVariant>;

struct SchemeSpec {
  Equation equation = Equation::Diffusion;
  CoefficientVariant variant = DiffusionVariant::Exponential;
  Base base = Base::T2;
  CompositionPlan plan;
};

/// Dimensionless step: r = dt*D/dx^2 and eta = v*dt/dx.
struct StepParams {
  double r = 0.0;
  double eta = 0.0;
};

struct SweepOp {
  PairUpdate update;
  SweepDirection direction;
};

/// One product of sweeps with a weight; `sweeps` is in application order.
struct ProductTerm {
  double weight = 1.0;
  std::vector<SweepOp> sweeps;
};

/// A time step reduced to concrete pair updates: sum_t weight_t * (product of sweeps_t).
struct SweepProgram {
  std::vector<ProductTerm> terms;

  void apply(Field1D& f) const;
  void apply(std::span<double> u, BoundaryKind boundary) const;

  /// Per-mode factor of the periodic operator away from the wrap seam.
  std::complex<double> factor(double theta) const;

  /// Largest per-site decay ratio of seam disturbances (|beta| for ascending,
  /// |lambda| for descending sweeps).
  double propagation_rate() const;

  std::size_t sweep_count() const;
};

/// Closed-form factor of a single sweep.
std::complex<double> sweep_factor(const PairUpdate& u, SweepDirection direction, double theta);

/// Checks the plan against the scheme's structural rules; throws on violation.
void validate(const SchemeSpec& spec);

/// Builds the sweep program for one step. Non-fatal concerns (e.g. backward
/// substeps in an advection-diffusion composition) are appended to `warnings`.
SweepProgram compile(const SchemeSpec& spec, const StepParams& params,
                     std::vector<std::string>* warnings = nullptr);

void step(Field1D& f, const SchemeSpec& spec, const StepParams& params);
void step_t2(Field1D& f, const SchemeSpec& spec, const StepParams& params);
void step_single_product(Field1D& f, const SchemeSpec& spec, const StepParams& params);
void step_multi_product(Field1D& f, const SchemeSpec& spec, const StepParams& params);

/// Diffusion step at (r, 0) followed by advection step at (0, eta).
void step_ad_sequential(Field1D& f, const SchemeSpec& adv_spec, const SchemeSpec& diff_spec,
                        const StepParams& params);

struct OrderConditionReport {
  double sum_minus_one;
  double sum_cubes;
  double sum_fifths;
  bool order2;
  bool order4;
  bool order6;
  bool target_met;
};

/// Residuals of sum a = 1, sum a^3 = 0, sum a^5 = 0 (tolerance 1e-12).
OrderConditionReport validate_order_conditions(const std::vector<double>& a, int target_order);

/// Harmonic multi-product plan of the given even order (2..12).
MultiProduct mpe_plan(int order);

}  // namespace sympfd
