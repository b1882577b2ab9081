#pragma once

#include <complex>

#include "sympfd/grid.hpp"

namespace sympfd {

/// Classical reference schemes used for comparison plots.
enum class Comparator {
  Euler,          // forward Euler diffusion, stable for r <= 1/2
  CrankNicolson,  // implicit trapezoidal diffusion
  LaxWendroff,    // second-order explicit advection
};

std::complex<double> comparator_factor(Comparator c, double r, double eta, double theta);

void euler_step(Field1D& f, double r);
void crank_nicolson_step(Field1D& f, double r);
void lax_wendroff_step(Field1D& f, double eta);

void comparator_step(Field1D& f, Comparator c, double r, double eta);

}  // namespace sympfd
