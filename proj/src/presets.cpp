#include "sympfd/presets.hpp"

#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "sympfd/error.hpp"

namespace sympfd {

std::vector<double> forest_ruth_coefficients() {
  const double cbrt2 = std::cbrt(2.0);
  const double a1 = 1.0 / (2.0 - cbrt2);
  const double a0 = -cbrt2 * a1;
  return {a1, a0, a1};
}

std::vector<double> suzuki_s4_coefficients() {
  const double cbrt4 = std::cbrt(4.0);
  const double a1 = 1.0 / (4.0 - cbrt4);
  const double a0 = -cbrt4 * a1;
  return {a1, a1, a0, a1, a1};
}

std::vector<double> yoshida_y6_coefficients() {
  const double a1 = -1.17767998417887;
  const double a2 = 0.235573213359357;
  const double a3 = 0.784513610477560;
  const double a0 = 1.0 - 2.0 * (a1 + a2 + a3);
  return {a3, a2, a1, a0, a1, a2, a3};
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) raise(ErrorKind::Parameter, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

std::vector<Rational> mpe_harmonic_coefficients(int n) {
  if (n < 1 || n > 6) raise(ErrorKind::Parameter, fmt::format("harmonic MPE needs 1 <= n <= 6, got {}", n));
  std::vector<Rational> out;
  for (std::int64_t k = 1; k <= n; ++k) {
    Rational c{1, 1};
    for (std::int64_t m = 1; m <= n; ++m) {
      if (m == k) continue;
      c = make_rational(c.num * k * k, c.den * (k * k - m * m));
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace sympfd
