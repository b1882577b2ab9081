#pragma once

#include <cstdint>
#include <vector>

namespace sympfd {

// Symmetric single-product coefficient lists {a_i}; each sums to 1.
std::vector<double> forest_ruth_coefficients();
std::vector<double> suzuki_s4_coefficients();
std::vector<double> yoshida_y6_coefficients();

/// Exact rational, always reduced with a positive denominator.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

Rational make_rational(std::int64_t num, std::int64_t den);

/// Multi-product weights c_1..c_n for the harmonic sequence k = 1..n:
///   c_k = prod_{m != k} k^2 / (k^2 - m^2),
/// giving a scheme of order 2n. Valid for 1 <= n <= 6.
std::vector<Rational> mpe_harmonic_coefficients(int n);

}  // namespace sympfd
