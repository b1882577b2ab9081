#include "sympfd/scheme.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "sympfd/error.hpp"
#include "sympfd/oracle.hpp"
#include "sympfd/presets.hpp"

namespace sympfd {

namespace {

struct PresetEntry {
  const char* name;
  SchemeBody body;
  int order;
};

SchemeSpec spec(Equation eq, CoefficientVariant v, Base b, CompositionPlan plan = {}) {
  return {eq, v, b, std::move(plan)};
}

std::vector<PresetEntry> presets(Equation eq) {
  using D = DiffusionVariant;
  using A = AdvectionVariant;
  using AD = AdvDiffVariant;
  const auto Dif = Equation::Diffusion;
  const auto Adv = Equation::Advection;
  const auto AdD = Equation::AdvDiff;
  const SchemeSpec a2c = spec(Adv, A::MatchedCN, Base::T2);
  const SchemeSpec d2s = spec(Dif, D::SaulyevMatched, Base::T2);
  switch (eq) {
    case Equation::Diffusion:
      return {
          {"euler", Comparator::Euler, 1},
          {"cn", Comparator::CrankNicolson, 2},
          {"d1a", spec(Dif, D::Exponential, Base::Sweep1A), 1},
          {"d1b", spec(Dif, D::Exponential, Base::Sweep1B), 1},
          {"d1as", spec(Dif, D::SaulyevMatched, Base::Sweep1A), 1},
          {"d1bs", spec(Dif, D::SaulyevMatched, Base::Sweep1B), 1},
          {"d2", spec(Dif, D::Exponential, Base::T2), 2},
          {"d2s", d2s, 2},
          {"t4", spec(Dif, D::SaulyevMatched, Base::T2, mpe_plan(4)), 4},
          {"t6", spec(Dif, D::SaulyevMatched, Base::T2, mpe_plan(6)), 6},
          {"t8", spec(Dif, D::SaulyevMatched, Base::T2, mpe_plan(8)), 8},
          {"exact", ExactSemiDiscrete{}, 0},
      };
    case Equation::Advection:
      return {
          {"a1a", spec(Adv, A::Trig, Base::Sweep1A), 1},
          {"a1b", spec(Adv, A::Trig, Base::Sweep1B), 1},
          {"s1a", spec(Adv, A::Saulyev, Base::Sweep1A), 1},
          {"s1b", spec(Adv, A::Saulyev, Base::Sweep1B), 1},
          {"rw1a", spec(Adv, A::RobertsWeiss, Base::Sweep1A), 1},
          {"rw1b", spec(Adv, A::RobertsWeiss, Base::Sweep1B), 1},
          {"a2", spec(Adv, A::Trig, Base::T2), 2},
          {"a2s", spec(Adv, A::Saulyev, Base::T2), 2},
          {"a2c", a2c, 2},
          {"rw2", spec(Adv, A::RobertsWeiss, Base::T2), 2},
          {"fr", spec(Adv, A::MatchedCN, Base::T2, SingleProduct{forest_ruth_coefficients()}), 4},
          {"s4", spec(Adv, A::MatchedCN, Base::T2, SingleProduct{suzuki_s4_coefficients()}), 4},
          {"y6", spec(Adv, A::MatchedCN, Base::T2, SingleProduct{yoshida_y6_coefficients()}), 6},
          {"lw", Comparator::LaxWendroff, 2},
          {"exact", ExactSemiDiscrete{}, 0},
      };
    case Equation::AdvDiff:
      return {
          {"rw1a", spec(AdD, AD::GeneralizedRW, Base::Sweep1A), 1},
          {"rw1b", spec(AdD, AD::GeneralizedRW, Base::Sweep1B), 1},
          {"rw2", spec(AdD, AD::GeneralizedRW, Base::T2), 2},
          {"ad2c", spec(AdD, AD::MatchedAD2C, Base::T2), 2},
          {"a_d", SequentialAD{a2c, d2s}, 2},
          {"t4", spec(AdD, AD::MatchedAD2C, Base::T2, mpe_plan(4)), 4},
          {"fr", spec(AdD, AD::MatchedAD2C, Base::T2, SingleProduct{forest_ruth_coefficients()}), 4},
          {"dd1a", spec(AdD, AD::SplitDerived, Base::Sweep1A), 1},
          {"dd1b", spec(AdD, AD::SplitDerived, Base::Sweep1B), 1},
          {"dd2", spec(AdD, AD::SplitDerived, Base::T2), 2},
          {"exact", ExactSemiDiscrete{}, 0},
      };
  }
  return {};
}

int inferred_order(const SchemeSpec& s) {
  if (s.base != Base::T2) return 1;
  if (const auto* mp = std::get_if<MultiProduct>(&s.plan)) return 2 * static_cast<int>(mp->terms.size());
  if (const auto* sp = std::get_if<SingleProduct>(&s.plan)) {
    const auto rep = validate_order_conditions(sp->a, 6);
    return rep.order6 ? 6 : rep.order4 ? 4 : 2;
  }
  return 2;
}

}  // namespace

std::vector<std::string> preset_names(Equation equation) {
  std::vector<std::string> out;
  for (const auto& p : presets(equation)) out.emplace_back(p.name);
  return out;
}

Scheme make_scheme(Equation equation, const std::string& name) {
  std::string base = name;
  int substeps = 1;
  if (const auto star = name.find('*'); star != std::string::npos) {
    const auto* first = name.data();
    const auto [ptr, ec] = std::from_chars(first, first + star, substeps);
    if (ec != std::errc{} || ptr != first + star || substeps < 1) {
      raise(ErrorKind::Usage, fmt::format("bad substep count in scheme '{}'", name));
    }
    base = name.substr(star + 1);
  }
  for (auto& p : presets(equation)) {
    if (base == p.name) return {name, equation, std::move(p.body), substeps, p.order};
  }
  raise(ErrorKind::Usage, fmt::format("unknown {} scheme '{}'; available: {}", to_string(equation), name,
                                      fmt::join(preset_names(equation), ", ")));
}

Scheme scheme_from_spec(const SchemeSpec& s, std::string name) {
  return {std::move(name), s.equation, s, 1, inferred_order(s)};
}

Stepper::Stepper(Scheme scheme, StepParams params) : scheme_(std::move(scheme)), params_(params) {
  if (scheme_.substeps < 1) raise(ErrorKind::Parameter, "substeps must be >= 1");
  if (!std::isfinite(params.r) || !std::isfinite(params.eta)) raise(ErrorKind::Parameter, "step parameters must be finite");
  if (params.r < 0.0) raise(ErrorKind::Stability, fmt::format("negative diffusion number r = {}", params.r));
  sub_ = {params.r / scheme_.substeps, params.eta / scheme_.substeps};
  if (const auto* s = std::get_if<SchemeSpec>(&scheme_.body)) {
    programs_.push_back(compile(*s, sub_, &warnings_));
  } else if (const auto* ad = std::get_if<SequentialAD>(&scheme_.body)) {
    programs_.push_back(compile(ad->diffusion, {sub_.r, 0.0}, &warnings_));
    programs_.push_back(compile(ad->advection, {0.0, sub_.eta}, &warnings_));
  }
}

void Stepper::advance_once(Field1D& f) const {
  if (!programs_.empty()) {
    for (const auto& p : programs_) p.apply(f);
  } else if (const auto* c = std::get_if<Comparator>(&scheme_.body)) {
    comparator_step(f, *c, sub_.r, sub_.eta);
  } else {
    if (f.boundary() != BoundaryKind::Periodic) raise(ErrorKind::BoundaryKind, "exact stepper needs a periodic field");
    const Field1D next = exact_evolve_dimensionless(f, sub_.r, sub_.eta);
    std::copy(next.values().begin(), next.values().end(), f.values().begin());
  }
}

void Stepper::advance(Field1D& f) const {
  for (int i = 0; i < scheme_.substeps; ++i) advance_once(f);
}

void Stepper::advance(Field1D& f, std::size_t steps) const {
  for (std::size_t i = 0; i < steps; ++i) advance(f);
}

std::complex<double> Stepper::factor(double theta) const {
  std::complex<double> g = 1.0;
  if (!programs_.empty()) {
    for (const auto& p : programs_) g *= p.factor(theta);
  } else if (const auto* c = std::get_if<Comparator>(&scheme_.body)) {
    g = comparator_factor(*c, sub_.r, sub_.eta, theta);
  } else {
    const double sn = std::sin(theta / 2.0);
    g = std::exp(std::complex<double>(-4.0 * sub_.r * sn * sn, -sub_.eta * std::sin(theta)));
  }
  std::complex<double> total = g;
  for (int i = 1; i < scheme_.substeps; ++i) total *= g;
  return total;
}

double Stepper::propagation_rate() const {
  double rho = 0.0;
  for (const auto& p : programs_) rho = std::max(rho, p.propagation_rate());
  return rho;
}

std::size_t Stepper::sweep_count() const {
  std::size_t n = 0;
  for (const auto& p : programs_) n += p.sweep_count();
  return n * static_cast<std::size_t>(scheme_.substeps);
}

bool Stepper::von_neumann_stable(int samples, double tol) const {
  for (int i = 0; i < samples; ++i) {
    const double theta = std::numbers::pi * i / std::max(samples - 1, 1);
    if (!(std::abs(factor(theta)) <= 1.0 + tol)) return false;
  }
  return true;
}

}  // namespace sympfd
