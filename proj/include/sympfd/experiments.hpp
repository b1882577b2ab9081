#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sympfd/grid.hpp"
#include "sympfd/oracle.hpp"
#include "sympfd/types.hpp"

namespace sympfd {

enum class Command { AmpFactor, Run, Converge, Norms, Phase };
enum class Profile { Gaussian, Sextic };
enum class Observable { AbsMoment, AbsWeightedMean, MeanPosition };

std::string_view to_string(Command c) noexcept;
std::string_view to_string(Profile p) noexcept;
std::string_view to_string(Observable o) noexcept;

struct ExperimentConfig {
  Command command = Command::Run;
  Equation equation = Equation::Diffusion;
  std::vector<std::string> schemes;

  std::size_t nx = 120;
  double xmin = -6.0;
  double xmax = 6.0;

  double dt = 0.1;
  std::optional<std::size_t> steps;
  std::optional<double> tfinal;

  double D = 0.5;
  double v = 0.0;

  Profile profile = Profile::Gaussian;
  double center = 0.0;
  double sigma = 0.5;

  // ampfactor / phase: dimensionless parameters override the grid-derived ones.
  std::optional<double> r;
  std::optional<double> eta;
  std::size_t ntheta = 181;

  // converge: step counts m with dt = tfinal/m, or explicit dt values.
  std::vector<std::size_t> steps_list;
  std::vector<double> dts;
  Observable observable = Observable::AbsMoment;

  // run: extra snapshot times; norms: output stride in steps.
  std::vector<double> checkpoints;
  std::size_t every = 1;

  std::string out;  // empty: standard output

  double dx() const;
  double r_value() const;    // --r or dt D / dx^2
  double eta_value() const;  // --eta or v dt / dx
  /// --steps, or round(tfinal/dt) (a warning is recorded when inexact).
  std::size_t step_count(std::vector<std::string>* warnings = nullptr) const;
};

/// Standard benchmark setup for a command and equation.
ExperimentConfig default_config(Command command, Equation equation);

Field1D initial_field(const ExperimentConfig& cfg);
double observe(const Field1D& f, Observable o);

struct AmpColumn {
  std::string scheme;
  std::vector<std::complex<double>> g;
  std::vector<double> phase;  // unwrapped for advection, principal otherwise
};
struct AmpTable {
  std::vector<double> theta;
  std::vector<AmpColumn> columns;
};
AmpTable compute_ampfactor(const ExperimentConfig& cfg);

struct RunColumn {
  std::string scheme;
  std::vector<double> final_values;
  std::vector<std::vector<double>> snapshots;  // one per checkpoint
  std::vector<double> checkpoint_norms;        // norm at t = 0, checkpoints..., final
  double max_abs_dev_vs_exact = 0.0;
};
struct RunResult {
  std::vector<double> x;
  std::vector<double> initial;
  std::vector<double> checkpoint_times;  // as realised on the step grid
  std::size_t steps = 0;
  std::vector<RunColumn> columns;
  std::vector<std::string> warnings;
};
RunResult compute_run(const ExperimentConfig& cfg);

struct ConvergeColumn {
  std::string scheme;
  std::vector<double> values;  // NaN where the scheme was skipped as unstable
  int nominal_order = 0;
  std::optional<ConvergenceFit> fit;
  std::optional<OrderEstimate> order_vs_exact;
};
struct ConvergeResult {
  std::vector<double> dts;
  std::vector<std::size_t> steps;
  double tfinal = 0.0;
  double exact_reference = 0.0;  // observable of the exact semi-discrete solution
  std::vector<ConvergeColumn> columns;
  std::vector<std::string> warnings;
};
ConvergeResult compute_converge(const ExperimentConfig& cfg);

struct NormsResult {
  std::vector<double> t;
  std::vector<std::size_t> step;
  std::vector<std::string> schemes;
  std::vector<std::vector<double>> rel_error;  // [scheme][row]
  std::vector<std::string> warnings;
};
NormsResult compute_norms(const ExperimentConfig& cfg);

struct PhaseResult {
  std::vector<double> theta;
  std::vector<std::string> schemes;
  std::vector<std::vector<double>> error;  // [scheme][row], phase - eta sin(theta)
};
PhaseResult compute_phase(const ExperimentConfig& cfg);

/// Runs the configured command and writes CSV to `out`; warnings go to `warnings`.
void run_experiment(const ExperimentConfig& cfg, std::ostream& out, std::vector<std::string>& warnings);

}  // namespace sympfd
