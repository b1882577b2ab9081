#include "sympfd/composition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "sympfd/error.hpp"
#include "sympfd/presets.hpp"

namespace sympfd {

namespace {

constexpr double kPlanTolerance = 1e-12;

template <class V>
V variant_as(const SchemeSpec& spec) {
  if (const auto* v = std::get_if<V>(&spec.variant)) return *v;
  raise(ErrorKind::Parameter,
        fmt::format("coefficient variant does not match equation '{}'", to_string(spec.equation)));
}

// Pair updates of one T2 step (1A half-step, then 1B half-step).
std::vector<SweepOp> t2_sweeps(const SchemeSpec& spec, const StepParams& p, bool backward_ok) {
  using enum SweepDirection;
  switch (spec.equation) {
    case Equation::Diffusion: {
      const auto u = diffusion_coeffs({p.r, variant_as<DiffusionVariant>(spec)}, true);
      return {{u, Ascending}, {u, Descending}};
    }
    case Equation::Advection: {
      const auto v = variant_as<AdvectionVariant>(spec);
      if (v == AdvectionVariant::RobertsWeiss && p.eta >= 2.0) {
        raise(ErrorKind::Parameter, fmt::format("RW2 is limited to eta < 2, got {}", p.eta));
      }
      const int div = v == AdvectionVariant::MatchedCN ? 1 : 2;
      return {{advection_coeffs({p.eta, v}, Ascending, div), Ascending},
              {advection_coeffs({p.eta, v}, Descending, div), Descending}};
    }
    case Equation::AdvDiff: {
      const auto v = variant_as<AdvDiffVariant>(spec);
      const AdvDiffParams half{p.r / 2.0, p.eta / 2.0, v, backward_ok};
      switch (v) {
        case AdvDiffVariant::SplitDerived: {
          const auto u = advdiff_coeffs_split(half);
          return {{u, Ascending}, {u, Descending}};
        }
        case AdvDiffVariant::GeneralizedRW:
          return {{advdiff_coeffs_rw(half, Ascending), Ascending},
                  {advdiff_coeffs_rw(half, Descending), Descending}};
        case AdvDiffVariant::MatchedAD2C: {
          const auto u = advdiff_coeffs_ad2c({p.r, p.eta, v, backward_ok});
          return {{u, Ascending}, {u, Descending}};
        }
      }
    }
  }
  raise(ErrorKind::Parameter, "unknown equation");
}

SweepOp single_sweep(const SchemeSpec& spec, const StepParams& p, SweepDirection dir) {
  switch (spec.equation) {
    case Equation::Diffusion:
      return {diffusion_coeffs({p.r, variant_as<DiffusionVariant>(spec)}), dir};
    case Equation::Advection:
      return {advection_coeffs({p.eta, variant_as<AdvectionVariant>(spec)}, dir), dir};
    case Equation::AdvDiff: {
      const AdvDiffParams ap{p.r, p.eta, variant_as<AdvDiffVariant>(spec)};
      switch (ap.variant) {
        case AdvDiffVariant::SplitDerived:
          return {advdiff_coeffs_split(ap), dir};
        case AdvDiffVariant::GeneralizedRW:
          return {advdiff_coeffs_rw(ap, dir), dir};
        case AdvDiffVariant::MatchedAD2C:
          return {advdiff_coeffs_ad2c(ap), dir};
      }
    }
  }
  raise(ErrorKind::Parameter, "unknown equation");
}

void check_spatial_amplification(const SweepOp& op) {
  const double rate = op.direction == SweepDirection::Ascending ? op.update.beta : op.update.lambda;
  if (!(std::abs(rate) < 1.0)) {
    raise(ErrorKind::SpatialAmplification,
          fmt::format("sweep propagation factor |{}| >= 1 amplifies along the sweep", rate));
  }
}

StepParams scaled(const StepParams& p, double a) { return {p.r * a, p.eta * a}; }

}  // namespace

std::complex<double> sweep_factor(const PairUpdate& u, SweepDirection direction, double theta) {
  const std::complex<double> e = std::polar(1.0, theta);
  const double g = u.gamma();
  if (direction == SweepDirection::Ascending) return (g + u.lambda * e) / (1.0 - u.beta * std::conj(e));
  return (g + u.beta * std::conj(e)) / (1.0 - u.lambda * e);
}

void SweepProgram::apply(std::span<double> u, BoundaryKind boundary) const {
  auto run = [boundary](std::span<double> v, const ProductTerm& t) {
    for (const auto& op : t.sweeps) {
      if (boundary == BoundaryKind::Periodic) {
        sweep_periodic(v, op.update, op.direction);
      } else {
        saulyev_sweep_fixed(v, op.update.gamma(), op.update.beta, op.update.lambda, op.direction);
      }
    }
  };
  if (terms.size() == 1 && terms.front().weight == 1.0) {
    run(u, terms.front());
    return;
  }
  std::vector<double> acc(u.size(), 0.0);
  std::vector<double> work(u.size());
  for (const auto& t : terms) {
    std::copy(u.begin(), u.end(), work.begin());
    run(work, t);
    for (std::size_t j = 0; j < u.size(); ++j) acc[j] += t.weight * work[j];
  }
  std::copy(acc.begin(), acc.end(), u.begin());
}

void SweepProgram::apply(Field1D& f) const { apply(f.values(), f.boundary()); }

std::complex<double> SweepProgram::factor(double theta) const {
  std::complex<double> total = 0.0;
  for (const auto& t : terms) {
    std::complex<double> g = 1.0;
    for (const auto& op : t.sweeps) g = sweep_factor(op.update, op.direction, theta) * g;
    total += t.weight * g;
  }
  return total;
}

double SweepProgram::propagation_rate() const {
  double rho = 0.0;
  for (const auto& t : terms)
    for (const auto& op : t.sweeps)
      rho = std::max(rho, std::abs(op.direction == SweepDirection::Ascending ? op.update.beta : op.update.lambda));
  return rho;
}

std::size_t SweepProgram::sweep_count() const {
  std::size_t n = 0;
  for (const auto& t : terms) n += t.sweeps.size();
  return n;
}

void validate(const SchemeSpec& spec) {
  const bool variant_ok = (spec.equation == Equation::Diffusion && std::holds_alternative<DiffusionVariant>(spec.variant)) ||
                          (spec.equation == Equation::Advection && std::holds_alternative<AdvectionVariant>(spec.variant)) ||
                          (spec.equation == Equation::AdvDiff && std::holds_alternative<AdvDiffVariant>(spec.variant));
  if (!variant_ok) {
    raise(ErrorKind::Parameter, fmt::format("coefficient variant does not match equation '{}'", to_string(spec.equation)));
  }
  if (std::holds_alternative<std::monostate>(spec.plan)) return;
  if (spec.base != Base::T2) raise(ErrorKind::Parameter, "composition plans require the T2 base");

  if (const auto* sp = std::get_if<SingleProduct>(&spec.plan)) {
    if (sp->a.empty()) raise(ErrorKind::Parameter, "single-product plan is empty");
    const double sum = std::accumulate(sp->a.begin(), sp->a.end(), 0.0);
    if (std::abs(sum - 1.0) > kPlanTolerance) {
      raise(ErrorKind::Parameter, fmt::format("single-product coefficients sum to {}, not 1", sum));
    }
    const bool negative = std::any_of(sp->a.begin(), sp->a.end(), [](double a) { return a < 0.0; });
    if (negative && spec.equation == Equation::Diffusion) {
      raise(ErrorKind::Stability, "diffusion compositions cannot contain negative substeps");
    }
  } else {
    const auto& mp = std::get<MultiProduct>(spec.plan);
    if (mp.terms.empty()) raise(ErrorKind::Parameter, "multi-product plan is empty");
    double sum = 0.0;
    for (const auto& t : mp.terms) {
      if (t.k < 1) raise(ErrorKind::Parameter, fmt::format("multi-product power k = {} must be >= 1", t.k));
      sum += t.c;
    }
    if (std::abs(sum - 1.0) > kPlanTolerance) {
      raise(ErrorKind::Parameter, fmt::format("multi-product weights sum to {}, not 1", sum));
    }
  }
}

SweepProgram compile(const SchemeSpec& spec, const StepParams& params, std::vector<std::string>* warnings) {
  validate(spec);
  if (!std::isfinite(params.r) || !std::isfinite(params.eta)) raise(ErrorKind::Parameter, "step parameters must be finite");
  SweepProgram prog;

  switch (spec.base) {
    case Base::Sweep1A:
      prog.terms.push_back({1.0, {single_sweep(spec, params, SweepDirection::Ascending)}});
      break;
    case Base::Sweep1B:
      prog.terms.push_back({1.0, {single_sweep(spec, params, SweepDirection::Descending)}});
      break;
    case Base::T2:
      if (std::holds_alternative<std::monostate>(spec.plan)) {
        prog.terms.push_back({1.0, t2_sweeps(spec, params, false)});
      } else if (const auto* sp = std::get_if<SingleProduct>(&spec.plan)) {
        ProductTerm term;
        bool backward = false;
        for (auto it = sp->a.rbegin(); it != sp->a.rend(); ++it) {
          backward = backward || *it < 0.0;
          const auto part = t2_sweeps(spec, scaled(params, *it), true);
          term.sweeps.insert(term.sweeps.end(), part.begin(), part.end());
        }
        if (backward && spec.equation == Equation::AdvDiff && warnings != nullptr) {
          warnings->push_back("composition contains negative substeps; stable only for small r");
        }
        prog.terms.push_back(std::move(term));
      } else {
        for (const auto& t : std::get<MultiProduct>(spec.plan).terms) {
          const auto part = t2_sweeps(spec, scaled(params, 1.0 / t.k), false);
          ProductTerm term{t.c, {}};
          for (int i = 0; i < t.k; ++i) term.sweeps.insert(term.sweeps.end(), part.begin(), part.end());
          prog.terms.push_back(std::move(term));
        }
      }
      break;
  }
  for (const auto& t : prog.terms)
    for (const auto& op : t.sweeps) check_spatial_amplification(op);
  return prog;
}

void step(Field1D& f, const SchemeSpec& spec, const StepParams& params) { compile(spec, params).apply(f); }

void step_t2(Field1D& f, const SchemeSpec& spec, const StepParams& params) {
  if (spec.base != Base::T2) raise(ErrorKind::Parameter, "step_t2 requires the T2 base");
  step(f, spec, params);
}

void step_single_product(Field1D& f, const SchemeSpec& spec, const StepParams& params) {
  if (!std::holds_alternative<SingleProduct>(spec.plan)) raise(ErrorKind::Parameter, "plan is not a single product");
  step(f, spec, params);
}

void step_multi_product(Field1D& f, const SchemeSpec& spec, const StepParams& params) {
  if (!std::holds_alternative<MultiProduct>(spec.plan)) raise(ErrorKind::Parameter, "plan is not a multi-product");
  step(f, spec, params);
}

void step_ad_sequential(Field1D& f, const SchemeSpec& adv_spec, const SchemeSpec& diff_spec,
                        const StepParams& params) {
  if (adv_spec.equation != Equation::Advection || diff_spec.equation != Equation::Diffusion) {
    raise(ErrorKind::Parameter, "sequential A/D step needs an advection and a diffusion scheme");
  }
  step(f, diff_spec, {params.r, 0.0});
  step(f, adv_spec, {0.0, params.eta});
}

OrderConditionReport validate_order_conditions(const std::vector<double>& a, int target_order) {
  if (a.empty()) raise(ErrorKind::Parameter, "order conditions need a nonempty list");
  double s1 = 0.0, s3 = 0.0, s5 = 0.0;
  for (double x : a) {
    s1 += x;
    s3 += x * x * x;
    s5 += x * x * x * x * x;
  }
  OrderConditionReport rep{s1 - 1.0, s3, s5, false, false, false, false};
  rep.order2 = std::abs(rep.sum_minus_one) <= kPlanTolerance;
  rep.order4 = rep.order2 && std::abs(s3) <= kPlanTolerance;
  rep.order6 = rep.order4 && std::abs(s5) <= kPlanTolerance;
  rep.target_met = target_order <= 2 ? rep.order2 : target_order <= 4 ? rep.order4 : target_order <= 6 ? rep.order6 : false;
  return rep;
}

MultiProduct mpe_plan(int order) {
  if (order < 2 || order % 2 != 0) raise(ErrorKind::Parameter, fmt::format("MPE order must be even and >= 2, got {}", order));
  const auto cs = mpe_harmonic_coefficients(order / 2);
  MultiProduct mp;
  for (std::size_t i = 0; i < cs.size(); ++i) mp.terms.push_back({cs[i].value(), static_cast<int>(i + 1)});
  return mp;
}

}  // namespace sympfd
