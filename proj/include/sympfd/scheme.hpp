#pragma once

#include <complex>
#include <string>
#include <variant>
#include <vector>

#include "sympfd/comparators.hpp"
#include "sympfd/composition.hpp"

namespace sympfd {

/// Diffusion step followed by advection step (commuting operators).
struct SequentialAD {
  SchemeSpec advection;
  SchemeSpec diffusion;
};

/// Exact solution of the semi-discrete system over one step.
struct ExactSemiDiscrete {};

using SchemeBody = std::variant<SchemeSpec, SequentialAD, Comparator, ExactSemiDiscrete>;

/// A named time stepper. `substeps` > 1 runs the body that many times at
/// dt/substeps (written "k*name" on the command line).
struct Scheme {
  std::string name;
  Equation equation = Equation::Diffusion;
  SchemeBody body;
  int substeps = 1;
  int nominal_order = 2;  // 0 for the exact stepper
};

/// Looks up a preset by name; "k*name" requests k substeps. Unknown names
/// raise a Usage error that lists the presets for the equation.
Scheme make_scheme(Equation equation, const std::string& name);

std::vector<std::string> preset_names(Equation equation);

/// Wraps a bare spec (nominal order inferred from its plan).
Scheme scheme_from_spec(const SchemeSpec& spec, std::string name = "custom");

/// A scheme bound to fixed dimensionless step parameters.
class Stepper {
 public:
  Stepper(Scheme scheme, StepParams params);

  void advance(Field1D& f) const;
  void advance(Field1D& f, std::size_t steps) const;

  /// Per-mode amplification factor of one full step.
  std::complex<double> factor(double theta) const;

  /// Seam-disturbance decay rate (0 for circulant steppers).
  double propagation_rate() const;
  std::size_t sweep_count() const;

  /// max |g| over theta in [0, pi] is <= 1 + tol.
  bool von_neumann_stable(int samples = 1024, double tol = 1e-12) const;

  const Scheme& scheme() const noexcept { return scheme_; }
  const StepParams& params() const noexcept { return params_; }
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

 private:
  void advance_once(Field1D& f) const;

  Scheme scheme_;
  StepParams params_;
  StepParams sub_;
  std::vector<SweepProgram> programs_;  // one for a spec, diffusion then advection for A/D
  std::vector<std::string> warnings_;
};

}  // namespace sympfd
