#include "sympfd/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>

#include <fmt/format.h>

#include "sympfd/csv.hpp"
#include "sympfd/error.hpp"
#include "sympfd/scheme.hpp"
#include "sympfd/spectral.hpp"

namespace sympfd {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Largest grid on which the O(N^2) exact comparison is still computed.
constexpr std::size_t kExactLimit = 8192;

std::vector<double> theta_grid(std::size_t n) {
  if (n < 1) raise(ErrorKind::Usage, "--ntheta must be >= 1");
  std::vector<double> t(n, 0.0);
  for (std::size_t i = 1; i < n; ++i) t[i] = std::numbers::pi * static_cast<double>(i) / static_cast<double>(n - 1);
  return t;
}

std::vector<Scheme> resolve(const ExperimentConfig& cfg) {
  if (cfg.schemes.empty()) raise(ErrorKind::Usage, "no schemes requested");
  std::vector<Scheme> out;
  for (const auto& name : cfg.schemes) out.push_back(make_scheme(cfg.equation, name));
  return out;
}

void validate_grid(const ExperimentConfig& cfg) {
  if (cfg.nx < 3) raise(ErrorKind::Usage, "--nx must be >= 3");
  if (!(cfg.xmax > cfg.xmin)) raise(ErrorKind::Usage, "--xmax must exceed --xmin");
  if (!(cfg.dt > 0.0) || !std::isfinite(cfg.dt)) raise(ErrorKind::Usage, "--dt must be positive");
  if (cfg.D < 0.0) raise(ErrorKind::Stability, "negative diffusion coefficient");
  if (cfg.equation == Equation::Diffusion && cfg.v != 0.0) raise(ErrorKind::Usage, "diffusion runs take --vel 0");
  if (cfg.equation == Equation::Advection && cfg.D != 0.0) raise(ErrorKind::Usage, "advection runs take --dcoef 0");
}

void echo_header(CsvWriter& w, const ExperimentConfig& cfg, const std::string& extra = {}) {
  w.comment(fmt::format("sympfd {} equation={}", to_string(cfg.command), to_string(cfg.equation)));
  w.comment(fmt::format("schemes={}", fmt::join(cfg.schemes, ";")));
  w.comment(fmt::format("N={} xmin={} xmax={} dx={} dt={} D={} v={} r={} eta={}", cfg.nx, format_number(cfg.xmin),
                        format_number(cfg.xmax), format_number(cfg.dx()), format_number(cfg.dt), format_number(cfg.D),
                        format_number(cfg.v), format_number(cfg.r_value()), format_number(cfg.eta_value())));
  w.comment(fmt::format("profile={} center={} sigma={}", to_string(cfg.profile), format_number(cfg.center),
                        format_number(cfg.sigma)));
  if (!extra.empty()) w.comment(extra);
  w.comment("deterministic: no random seed; reruns are byte-identical");
}


}  // namespace

std::string_view to_string(Command c) noexcept {
  switch (c) {
    case Command::AmpFactor: return "ampfactor";
    case Command::Run: return "run";
    case Command::Converge: return "converge";
    case Command::Norms: return "norms";
    case Command::Phase: return "phase";
  }
  return "?";
}

std::string_view to_string(Profile p) noexcept { return p == Profile::Gaussian ? "gaussian" : "sextic"; }

std::string_view to_string(Observable o) noexcept {
  switch (o) {
    case Observable::AbsMoment: return "abs_moment";
    case Observable::AbsWeightedMean: return "abs_weighted_mean";
    case Observable::MeanPosition: return "mean_position";
  }
  return "?";
}

double ExperimentConfig::dx() const { return (xmax - xmin) / static_cast<double>(nx); }
double ExperimentConfig::r_value() const { return r ? *r : dt * D / (dx() * dx()); }
double ExperimentConfig::eta_value() const { return eta ? *eta : v * dt / dx(); }

std::size_t ExperimentConfig::step_count(std::vector<std::string>* warnings) const {
  if (steps) return *steps;
  if (!tfinal) return 0;
  if (*tfinal < 0.0) raise(ErrorKind::Usage, "--tfinal must be >= 0");
  const double m = std::round(*tfinal / dt);
  if (warnings && std::abs(m * dt - *tfinal) > 1e-9 * std::max(1.0, *tfinal)) {
    warnings->push_back(fmt::format("tfinal {} is not a multiple of dt {}; running {} steps", *tfinal, dt, m));
  }
  return static_cast<std::size_t>(m);
}

ExperimentConfig default_config(Command command, Equation equation) {
  ExperimentConfig c;
  c.command = command;
  c.equation = equation;
  // Base grids: diffusion on [-6, 6], advection on [-10, 10], advdiff on [0, 10].
  switch (equation) {
    case Equation::Diffusion:
      c.nx = 120, c.xmin = -6.0, c.xmax = 6.0, c.D = 0.5, c.v = 0.0, c.dt = 0.1, c.tfinal = 1.0;
      c.profile = Profile::Gaussian, c.center = 0.0, c.sigma = 0.5;
      c.observable = Observable::AbsMoment;
      break;
    case Equation::Advection:
      c.nx = 800, c.xmin = -10.0, c.xmax = 10.0, c.D = 0.0, c.v = 1.0, c.dt = 0.02, c.steps = 5000;
      c.profile = Profile::Sextic, c.center = 0.0;
      c.observable = Observable::AbsWeightedMean;
      break;
    case Equation::AdvDiff:
      c.nx = 200, c.xmin = 0.0, c.xmax = 10.0, c.D = 0.1, c.v = 1.0, c.dt = 0.033, c.tfinal = 10.0;
      c.profile = Profile::Gaussian, c.center = 5.0, c.sigma = 0.5;
      c.observable = Observable::MeanPosition;
      break;
  }
  switch (command) {
    case Command::AmpFactor:
      if (equation == Equation::Diffusion) {
        c.r = 2.0;
        c.schemes = {"exact", "euler", "cn", "d2", "d2s"};
      } else if (equation == Equation::Advection) {
        c.eta = 0.7;
        c.schemes = {"exact", "a1a", "a1b", "a2", "a2s", "a2c", "rw1a", "rw1b", "rw2", "lw"};
      } else {
        c.r = 0.066, c.eta = 0.66;
        c.schemes = {"exact", "rw1a", "rw1b", "rw2", "ad2c", "a_d", "t4"};
      }
      break;
    case Command::Run:
      if (equation == Equation::Diffusion) {
        c.schemes = {"d1a", "d1b", "d2", "d1as", "d1bs", "d2s", "exact"};
      } else if (equation == Equation::Advection) {
        c.schemes = {"a2", "a2s", "a2c", "rw1b", "lw"};
      } else {
        c.schemes = {"rw1a", "ad2c", "a_d", "exact"};
      }
      break;
    case Command::Converge:
      c.steps.reset();
      if (equation == Equation::Diffusion) {
        c.tfinal = 1.0;
        c.steps_list = {9, 10, 12, 15, 20, 25, 30, 40, 50, 60, 80, 100, 150, 200, 300, 400};
        c.schemes = {"euler", "12*euler", "d2s", "6*d2s", "t4", "t6"};
      } else if (equation == Equation::Advection) {
        c.tfinal = 10.0, c.center = -5.0;
        c.steps_list = {50, 60, 70, 80, 100, 125, 150, 200, 250, 300, 400, 500, 700, 1000};
        c.schemes = {"a2c", "3*a2c", "fr", "5*a2c", "s4", "7*a2c", "y6", "rw1a"};
      } else {
        c.tfinal = 10.0;
        c.steps_list = {100, 125, 150, 200, 250, 300, 400, 500, 700, 1000};
        c.schemes = {"ad2c", "a_d", "t4", "rw2"};
      }
      break;
    case Command::Norms:
      c.tfinal = 40.0;
      if (equation == Equation::AdvDiff) {
        c.D = 0.005;
        c.schemes = {"rw1a", "rw1b", "ad2c", "a_d", "t4", "rw2", "fr"};
      } else if (equation == Equation::Advection) {
        c.steps.reset();
        c.schemes = {"rw1a", "rw1b", "a2c"};
      } else {
        c.schemes = {"d2s", "t4"};
      }
      break;
    case Command::Phase:
      c.eta = 0.7;
      c.schemes = {"exact", "a1a", "a1b", "a2", "rw1a", "rw1b", "rw2", "a2c", "lw"};
      break;
  }
  return c;
}

Field1D initial_field(const ExperimentConfig& cfg) {
  validate_grid(cfg);
  if (cfg.profile == Profile::Gaussian) return gaussian_profile(cfg.nx, cfg.xmin, cfg.dx(), cfg.center, cfg.sigma);
  return sextic_profile(cfg.nx, cfg.xmin, cfg.dx(), cfg.center);
}

double observe(const Field1D& f, Observable o) {
  switch (o) {
    case Observable::AbsMoment: return abs_moment(f);
    case Observable::AbsWeightedMean: return abs_weighted_mean(f);
    case Observable::MeanPosition: return mean_position(f);
  }
  return kNaN;
}

AmpTable compute_ampfactor(const ExperimentConfig& cfg) {
  const double r = cfg.equation == Equation::Advection ? 0.0 : cfg.r_value();
  const double eta = cfg.equation == Equation::Diffusion ? 0.0 : cfg.eta_value();
  AmpTable t;
  t.theta = theta_grid(cfg.ntheta);
  for (const auto& s : resolve(cfg)) {
    const Stepper stepper(s, {r, eta});
    AmpColumn col{s.name, {}, {}};
    for (double th : t.theta) col.g.push_back(stepper.factor(th));
    if (cfg.equation == Equation::Advection) {
      col.phase = phase_curve(s, eta, t.theta);
    } else {
      for (const auto& g : col.g) col.phase.push_back(-std::arg(g));
    }
    t.columns.push_back(std::move(col));
  }
  return t;
}

RunResult compute_run(const ExperimentConfig& cfg) {
  const Field1D init = initial_field(cfg);
  RunResult res;
  res.steps = cfg.step_count(&res.warnings);
  for (std::size_t j = 0; j < init.size(); ++j) res.x.push_back(init.x(j));
  res.initial.assign(init.values().begin(), init.values().end());

  std::vector<std::size_t> marks;
  for (double t : cfg.checkpoints) {
    if (t < 0.0) raise(ErrorKind::Usage, "checkpoint times must be >= 0");
    const auto m = static_cast<std::size_t>(std::round(t / cfg.dt));
    if (m > res.steps) raise(ErrorKind::Usage, fmt::format("checkpoint {} lies beyond the final time", t));
    marks.push_back(m);
  }
  std::sort(marks.begin(), marks.end());
  for (auto m : marks) res.checkpoint_times.push_back(static_cast<double>(m) * cfg.dt);

  std::vector<double> exact_final;
  if (init.size() <= kExactLimit) {
    const double dx = cfg.dx();
    const double total = static_cast<double>(res.steps);
    const Field1D ex = exact_evolve_dimensionless(init, total * cfg.dt * cfg.D / (dx * dx), total * cfg.v * cfg.dt / dx);
    exact_final.assign(ex.values().begin(), ex.values().end());
  }

  const StepParams params{cfg.dt * cfg.D / (cfg.dx() * cfg.dx()), cfg.v * cfg.dt / cfg.dx()};
  for (const auto& s : resolve(cfg)) {
    RunColumn col;
    col.scheme = s.name;
    Field1D f = init;
    if (std::holds_alternative<ExactSemiDiscrete>(s.body)) {
      // One exact evolution per segment; exact for any segment length.
      std::size_t done = 0;
      auto jump = [&](std::size_t to) {
        const double k = static_cast<double>(to - done);
        f = exact_evolve_dimensionless(f, k * params.r, k * params.eta);
        done = to;
      };
      col.checkpoint_norms.push_back(norm(f));
      for (auto m : marks) {
        jump(m);
        col.snapshots.emplace_back(f.values().begin(), f.values().end());
        col.checkpoint_norms.push_back(norm(f));
      }
      jump(res.steps);
    } else {
      const Stepper stepper(s, params);
      for (const auto& w : stepper.warnings()) res.warnings.push_back(fmt::format("{}: {}", s.name, w));
      std::size_t done = 0;
      col.checkpoint_norms.push_back(norm(f));
      for (auto m : marks) {
        stepper.advance(f, m - done);
        done = m;
        col.snapshots.emplace_back(f.values().begin(), f.values().end());
        col.checkpoint_norms.push_back(norm(f));
      }
      stepper.advance(f, res.steps - done);
    }
    col.checkpoint_norms.push_back(norm(f));
    col.final_values.assign(f.values().begin(), f.values().end());
    if (!f.all_finite()) res.warnings.push_back(fmt::format("{}: solution is no longer finite", s.name));
    col.max_abs_dev_vs_exact = kNaN;
    if (!exact_final.empty()) {
      double m = 0.0;
      for (std::size_t j = 0; j < exact_final.size(); ++j) m = std::max(m, std::abs(col.final_values[j] - exact_final[j]));
      col.max_abs_dev_vs_exact = m;
    }
    res.columns.push_back(std::move(col));
  }
  return res;
}

ConvergeResult compute_converge(const ExperimentConfig& cfg) {
  const Field1D init = initial_field(cfg);
  if (!cfg.tfinal || !(*cfg.tfinal > 0.0)) raise(ErrorKind::Usage, "converge needs a positive --tfinal");
  ConvergeResult res;
  res.tfinal = *cfg.tfinal;
  if (!cfg.steps_list.empty()) {
    res.steps = cfg.steps_list;
  } else {
    for (double dt : cfg.dts) {
      if (!(dt > 0.0)) raise(ErrorKind::Usage, "dt values must be positive");
      const double m = std::max(1.0, std::round(res.tfinal / dt));
      if (std::abs(m * dt - res.tfinal) > 1e-9 * res.tfinal) {
        res.warnings.push_back(fmt::format("dt {} does not divide tfinal {}; using dt = {}", dt, res.tfinal,
                                           format_number(res.tfinal / m)));
      }
      res.steps.push_back(static_cast<std::size_t>(m));
    }
  }
  if (res.steps.size() < 3) raise(ErrorKind::Usage, "converge needs at least three step counts");
  for (auto m : res.steps) {
    if (m == 0) raise(ErrorKind::Usage, "step counts must be >= 1");
    res.dts.push_back(res.tfinal / static_cast<double>(m));
  }

  const double dx = cfg.dx();
  res.exact_reference = kNaN;
  if (init.size() <= kExactLimit) {
    const Field1D ex = exact_evolve(init, cfg.D, cfg.v, res.tfinal);
    res.exact_reference = observe(ex, cfg.observable);
  }

  for (const auto& s : resolve(cfg)) {
    ConvergeColumn col;
    col.scheme = s.name;
    col.nominal_order = s.nominal_order;
    std::vector<double> fdts, fvals;
    for (std::size_t i = 0; i < res.steps.size(); ++i) {
      const double dt = res.dts[i];
      const StepParams p{dt * cfg.D / (dx * dx), cfg.v * dt / dx};
      double value = kNaN;
      try {
        const Stepper stepper(s, p);
        if (!stepper.von_neumann_stable()) {
          res.warnings.push_back(fmt::format("{}: skipped dt = {} (unstable)", s.name, format_number(dt)));
        } else {
          Field1D f = init;
          stepper.advance(f, res.steps[i]);
          value = observe(f, cfg.observable);
        }
      } catch (const SolverError& e) {
        if (e.kind() == ErrorKind::Usage) throw;
        res.warnings.push_back(fmt::format("{}: skipped dt = {} ({})", s.name, format_number(dt), e.what()));
      }
      col.values.push_back(value);
      if (std::isfinite(value)) {
        fdts.push_back(dt);
        fvals.push_back(value);
      }
    }
    if (s.nominal_order > 0 && fdts.size() >= 3) {
      try {
        col.fit = fit_convergence(fdts, fvals, s.nominal_order);
        for (const auto& w : col.fit->order.warnings) res.warnings.push_back(fmt::format("{}: {}", s.name, w));
        if (std::isfinite(res.exact_reference)) col.order_vs_exact = order_against(fdts, fvals, res.exact_reference);
      } catch (const SolverError& e) {
        res.warnings.push_back(fmt::format("{}: no order fit ({})", s.name, e.what()));
      }
    }
    res.columns.push_back(std::move(col));
  }
  return res;
}

NormsResult compute_norms(const ExperimentConfig& cfg) {
  const Field1D init = initial_field(cfg);
  if (cfg.every < 1) raise(ErrorKind::Usage, "--every must be >= 1");
  NormsResult res;
  const std::size_t steps = cfg.step_count(&res.warnings);
  for (std::size_t k = 0; k <= steps; ++k) {
    if (k % cfg.every == 0 || k == steps) {
      res.step.push_back(k);
      res.t.push_back(static_cast<double>(k) * cfg.dt);
    }
  }
  const double dx = cfg.dx();
  const StepParams p{cfg.dt * cfg.D / (dx * dx), cfg.v * cfg.dt / dx};
  const double n0 = norm(init);
  if (n0 == 0.0) raise(ErrorKind::DegenerateInput, "initial norm is zero");
  for (const auto& s : resolve(cfg)) {
    const Stepper stepper(s, p);
    for (const auto& w : stepper.warnings()) res.warnings.push_back(fmt::format("{}: {}", s.name, w));
    Field1D f = init;
    std::vector<double> col;
    std::size_t done = 0;
    for (auto k : res.step) {
      stepper.advance(f, k - done);
      done = k;
      col.push_back((norm(f) - n0) / n0);
    }
    res.schemes.push_back(s.name);
    res.rel_error.push_back(std::move(col));
  }
  return res;
}

PhaseResult compute_phase(const ExperimentConfig& cfg) {
  if (cfg.equation != Equation::Advection) raise(ErrorKind::Usage, "phase needs --equation advection");
  const double eta = cfg.eta_value();
  PhaseResult res;
  res.theta = theta_grid(cfg.ntheta);
  for (const auto& s : resolve(cfg)) {
    auto phase = phase_curve(s, eta, res.theta);
    for (std::size_t i = 0; i < phase.size(); ++i) phase[i] -= eta * std::sin(res.theta[i]);
    res.schemes.push_back(s.name);
    res.error.push_back(std::move(phase));
  }
  return res;
}

void run_experiment(const ExperimentConfig& cfg, std::ostream& out, std::vector<std::string>& warnings) {
  CsvWriter w(out);
  switch (cfg.command) {
    case Command::AmpFactor: {
      const auto t = compute_ampfactor(cfg);
      const double r = cfg.equation == Equation::Advection ? 0.0 : cfg.r_value();
      const double eta = cfg.equation == Equation::Diffusion ? 0.0 : cfg.eta_value();
      echo_header(w, cfg, fmt::format("amplification at r={} eta={} ntheta={}", format_number(r), format_number(eta), cfg.ntheta));
      std::vector<std::string> names{"theta"};
      for (const auto& c : t.columns)
        for (const char* suffix : {"re", "im", "abs", "phase"}) names.push_back(fmt::format("{}_{}", c.scheme, suffix));
      w.header(names);
      for (std::size_t i = 0; i < t.theta.size(); ++i) {
        std::vector<double> row{t.theta[i]};
        for (const auto& c : t.columns) {
          row.insert(row.end(), {c.g[i].real(), c.g[i].imag(), std::abs(c.g[i]), c.phase[i]});
        }
        w.row(row);
      }
      return;
    }
    case Command::Run: {
      const auto r = compute_run(cfg);
      warnings.insert(warnings.end(), r.warnings.begin(), r.warnings.end());
      echo_header(w, cfg, fmt::format("steps={} t={}", r.steps, format_number(static_cast<double>(r.steps) * cfg.dt)));
      for (const auto& c : r.columns) {
        std::vector<std::string> norms;
        for (double n : c.checkpoint_norms) norms.push_back(format_number(n));
        w.comment(fmt::format("{}: norms={} max_abs_dev_vs_exact={}", c.scheme, fmt::join(norms, ";"),
                              format_number(c.max_abs_dev_vs_exact)));
      }
      std::vector<std::string> names{"x", "u_initial"};
      for (const auto& c : r.columns) {
        for (double t : r.checkpoint_times) names.push_back(fmt::format("{}@{}", c.scheme, format_number(t)));
        names.push_back(c.scheme);
      }
      w.header(names);
      for (std::size_t j = 0; j < r.x.size(); ++j) {
        std::vector<double> row{r.x[j], r.initial[j]};
        for (const auto& c : r.columns) {
          for (const auto& snap : c.snapshots) row.push_back(snap[j]);
          row.push_back(c.final_values[j]);
        }
        w.row(row);
      }
      return;
    }
    case Command::Converge: {
      const auto r = compute_converge(cfg);
      warnings.insert(warnings.end(), r.warnings.begin(), r.warnings.end());
      echo_header(w, cfg, fmt::format("observable={} tfinal={}", to_string(cfg.observable), format_number(r.tfinal)));
      std::vector<std::string> names{"dt"};
      for (const auto& c : r.columns) names.push_back(c.scheme);
      w.header(names);
      for (std::size_t i = 0; i < r.dts.size(); ++i) {
        std::vector<double> row{r.dts[i]};
        for (const auto& c : r.columns) row.push_back(c.values[i]);
        w.row(row);
      }
      std::vector<double> plateau, order, exact, order_ex;
      for (const auto& c : r.columns) {
        plateau.push_back(c.fit ? c.fit->plateau : kNaN);
        order.push_back(c.fit ? c.fit->order.slope : kNaN);
        exact.push_back(r.exact_reference);
        order_ex.push_back(c.order_vs_exact ? c.order_vs_exact->slope : kNaN);
      }
      w.labeled_row("plateau", plateau);
      w.labeled_row("order", order);
      w.labeled_row("exact_reference", exact);
      w.labeled_row("order_vs_exact", order_ex);
      return;
    }
    case Command::Norms: {
      const auto r = compute_norms(cfg);
      warnings.insert(warnings.end(), r.warnings.begin(), r.warnings.end());
      echo_header(w, cfg, fmt::format("relative norm error (norm(t) - norm(0))/norm(0), every={}", cfg.every));
      std::vector<std::string> names{"t"};
      names.insert(names.end(), r.schemes.begin(), r.schemes.end());
      w.header(names);
      for (std::size_t i = 0; i < r.t.size(); ++i) {
        std::vector<double> row{r.t[i]};
        for (const auto& c : r.rel_error) row.push_back(c[i]);
        w.row(row);
      }
      return;
    }
    case Command::Phase: {
      const auto r = compute_phase(cfg);
      echo_header(w, cfg, fmt::format("phase error phi - eta sin(theta) at eta={}", format_number(cfg.eta_value())));
      std::vector<std::string> names{"theta"};
      names.insert(names.end(), r.schemes.begin(), r.schemes.end());
      w.header(names);
      for (std::size_t i = 0; i < r.theta.size(); ++i) {
        std::vector<double> row{r.theta[i]};
        for (const auto& c : r.error) row.push_back(c[i]);
        w.row(row);
      }
      return;
    }
  }
}

}  // namespace sympfd
