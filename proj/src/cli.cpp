#include "sympfd/cli.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "sympfd/error.hpp"
#include "sympfd/experiments.hpp"

namespace sympfd::cli {

namespace {

struct Raw {
  std::string equation = "diffusion";
  std::vector<std::string> schemes;
  std::size_t nx = 0;
  double xmin = 0, xmax = 0, dt = 0, tfinal = 0, dcoef = 0, vel = 0, center = 0, sigma = 0, r = 0, eta = 0;
  std::size_t steps = 0, ntheta = 0, every = 0;
  std::string profile;
  std::string observable;
  std::vector<double> dts, checkpoints;
  std::vector<std::size_t> steps_list;
  std::string out;
};

template <class Map>
std::vector<std::string> keys(const Map& m) {
  std::vector<std::string> k;
  for (const auto& [name, value] : m) k.push_back(name);
  return k;
}

template <class T>
void overlay(const CLI::Option* opt, T& dst, const T& src) {
  if (opt->count() > 0) dst = src;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symplectic finite-difference solvers for 1D diffusion, advection and advection-diffusion", "sympfd"};
  app.require_subcommand(1);
  Raw raw;

  const std::map<std::string, Equation> equations{
      {"diffusion", Equation::Diffusion}, {"advection", Equation::Advection}, {"advdiff", Equation::AdvDiff}};
  const std::map<std::string, Profile> profiles{{"gaussian", Profile::Gaussian}, {"sextic", Profile::Sextic}};
  const std::map<std::string, Observable> observables{{"abs_moment", Observable::AbsMoment},
                                                      {"abs_weighted_mean", Observable::AbsWeightedMean},
                                                      {"mean_position", Observable::MeanPosition}};

  auto* o_equation = app.add_option("--equation", raw.equation, "diffusion | advection | advdiff (phase: advection)")
      ->check(CLI::IsMember(keys(equations)));
  auto* o_scheme = app.add_option("--scheme", raw.schemes, "Preset name(s), comma separated; k*name runs k substeps")
                       ->delimiter(',');
  auto* o_nx = app.add_option("--nx", raw.nx, "Number of grid points");
  auto* o_xmin = app.add_option("--xmin", raw.xmin, "Left edge of the periodic box");
  auto* o_xmax = app.add_option("--xmax", raw.xmax, "Right edge of the periodic box");
  auto* o_dt = app.add_option("--dt", raw.dt, "Time step");
  auto* o_steps = app.add_option("--steps", raw.steps, "Number of time steps");
  auto* o_tfinal = app.add_option("--tfinal", raw.tfinal, "Final time (steps = tfinal/dt)");
  o_steps->excludes(o_tfinal);
  auto* o_d = app.add_option("--dcoef", raw.dcoef, "Diffusion coefficient D");
  auto* o_v = app.add_option("--vel", raw.vel, "Advection velocity v");
  auto* o_profile = app.add_option("--profile", raw.profile, "gaussian | sextic")
                        ->check(CLI::IsMember(keys(profiles)));
  auto* o_center = app.add_option("--center", raw.center, "Profile center");
  auto* o_sigma = app.add_option("--sigma", raw.sigma, "Gaussian width");
  auto* o_out = app.add_option("--out", raw.out, "Output CSV path (default: stdout)");
  auto* o_r = app.add_option("--r", raw.r, "Diffusion number dt D/dx^2 (ampfactor, phase)");
  auto* o_eta = app.add_option("--eta", raw.eta, "Courant number v dt/dx (ampfactor, phase)");
  auto* o_ntheta = app.add_option("--ntheta", raw.ntheta, "Number of theta samples on [0, pi]");
  auto* o_dts = app.add_option("--dts", raw.dts, "Comma-separated dt values (converge)")->delimiter(',');
  auto* o_steps_list =
      app.add_option("--steps-list", raw.steps_list, "Comma-separated step counts m, dt = tfinal/m (converge)")
          ->delimiter(',');
  o_dts->excludes(o_steps_list);
  auto* o_obs = app.add_option("--observable", raw.observable, "abs_moment | abs_weighted_mean | mean_position")
                    ->check(CLI::IsMember(keys(observables)));
  auto* o_check = app.add_option("--checkpoints", raw.checkpoints, "Extra snapshot times (run)")->delimiter(',');
  auto* o_every = app.add_option("--every", raw.every, "Row stride in steps (norms)");

  const std::vector<std::pair<const char*, Command>> commands{
      {"ampfactor", Command::AmpFactor}, {"run", Command::Run}, {"converge", Command::Converge},
      {"norms", Command::Norms}, {"phase", Command::Phase}};
  const std::map<std::string, const char*> help{
      {"ampfactor", "Per-mode amplification factors g(theta)"},
      {"run", "Evolve an initial profile and write final (and checkpoint) fields"},
      {"converge", "Observable versus dt with fitted plateau and order"},
      {"norms", "Relative norm error versus time"},
      {"phase", "Phase error versus theta for advection schemes"}};
  std::vector<CLI::App*> subs;
  for (const auto& [name, cmd] : commands) subs.push_back(app.add_subcommand(name, help.at(name))->fallthrough());

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  Command command = Command::Run;
  for (std::size_t i = 0; i < subs.size(); ++i)
    if (subs[i]->parsed()) command = commands[i].second;

  if (command == Command::Phase && o_equation->count() == 0) raw.equation = "advection";
  ExperimentConfig cfg = default_config(command, equations.at(raw.equation));
  overlay(o_scheme, cfg.schemes, raw.schemes);
  overlay(o_nx, cfg.nx, raw.nx);
  overlay(o_xmin, cfg.xmin, raw.xmin);
  overlay(o_xmax, cfg.xmax, raw.xmax);
  overlay(o_dt, cfg.dt, raw.dt);
  if (o_steps->count()) cfg.steps = raw.steps, cfg.tfinal.reset();
  if (o_tfinal->count()) cfg.tfinal = raw.tfinal, cfg.steps.reset();
  overlay(o_d, cfg.D, raw.dcoef);
  overlay(o_v, cfg.v, raw.vel);
  if (o_profile->count()) cfg.profile = profiles.at(raw.profile);
  overlay(o_center, cfg.center, raw.center);
  overlay(o_sigma, cfg.sigma, raw.sigma);
  overlay(o_out, cfg.out, raw.out);
  if (o_r->count()) cfg.r = raw.r;
  if (o_eta->count()) cfg.eta = raw.eta;
  overlay(o_ntheta, cfg.ntheta, raw.ntheta);
  if (o_dts->count()) cfg.dts = raw.dts, cfg.steps_list.clear();
  if (o_steps_list->count()) cfg.steps_list = raw.steps_list, cfg.dts.clear();
  if (o_obs->count()) cfg.observable = observables.at(raw.observable);
  overlay(o_check, cfg.checkpoints, raw.checkpoints);
  overlay(o_every, cfg.every, raw.every);

  std::vector<std::string> warnings;
  try {
    std::ostringstream buffer;
    run_experiment(cfg, buffer, warnings);
    if (cfg.out.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(cfg.out, std::ios::binary);
      if (!file || !(file << buffer.str())) {
        err << "error: cannot write " << cfg.out << '\n';
        return 1;
      }
    }
  } catch (const SolverError& e) {
    for (const auto& w : warnings) err << "warning: " << w << '\n';
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::Usage ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  for (const auto& w : warnings) err << "warning: " << w << '\n';
  return 0;
}

}  // namespace sympfd::cli
