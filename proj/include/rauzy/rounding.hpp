#pragma once

#include <cmath>
#include <limits>
#include <string_view>

namespace rauzy {

// Directed floating-point evaluation. Every irrational quantity that enters
// an inequality is computed with an explicit rounding direction, so the
// computed value bounds the true one from the requested side.
//
// +, -, *, /, sqrt are correctly rounded in IEEE-754 double, so one ulp step
// past the nearest result is a valid directed bound. pow has no such
// guarantee in libm; it goes through a multiplicative slack (default 1e-12,
// several orders of magnitude above observed libm error) that callers may
// tighten where a check needs finer resolution.

enum class Rounding { Down, Up, Nearest };

inline constexpr double kPowSlack = 1e-12;

inline Rounding opposite(Rounding dir) {
  if (dir == Rounding::Up) return Rounding::Down;
  if (dir == Rounding::Down) return Rounding::Up;
  return Rounding::Nearest;
}

inline double next_up(double x) {
  return std::nextafter(x, std::numeric_limits<double>::infinity());
}

inline double next_down(double x) {
  return std::nextafter(x, -std::numeric_limits<double>::infinity());
}

inline double directed(double nearest_value, Rounding dir) {
  switch (dir) {
    case Rounding::Up: return next_up(nearest_value);
    case Rounding::Down: return next_down(nearest_value);
    default: return nearest_value;
  }
}

// Exactness guards: operations whose result is exact skip the ulp step, so
// accumulations seeded at zero and scalings by one stay clean.
inline double add_dir(double a, double b, Rounding dir) {
  if (a == 0.0) return b;
  if (b == 0.0) return a;
  return directed(a + b, dir);
}
inline double sub_dir(double a, double b, Rounding dir) {
  if (b == 0.0) return a;
  if (a == 0.0) return -b;
  return directed(a - b, dir);
}
inline double mul_dir(double a, double b, Rounding dir) {
  if (a == 0.0 || b == 0.0) return 0.0;
  if (a == 1.0) return b;
  if (b == 1.0) return a;
  return directed(a * b, dir);
}
inline double div_dir(double a, double b, Rounding dir) {
  if (a == 0.0) return 0.0;
  if (b == 1.0) return a;
  return directed(a / b, dir);
}
inline double sqrt_dir(double a, Rounding dir) {
  if (a == 0.0 || a == 1.0) return a;
  return directed(std::sqrt(a), dir);
}

// Directed power. Exact short-circuits keep identities like g(1) = 1 exact:
// base 1 and exponent 0 return 1.0, exponent 1 returns the base unchanged.
double pow_dir(double base, double exponent, Rounding dir, double slack = kPowSlack);

// The contraction exponent 3/2 - 1/sqrt(3), materialised per rounding
// direction and never cached as a decimal (it appears in exponents on both
// sides of inequalities).
double lambda_exponent(Rounding dir);

// (1 - lambda)/(3 - lambda): below this the tail series is not summable.
double delta_threshold(Rounding dir);

// Smallest multiple of 10^-places that is >= x ("rounded upwards" reporting).
double round_up_decimals(double x, int places);

std::string_view to_string(Rounding dir);

}  // namespace rauzy
