#include "rauzy/rational.hpp"

namespace rauzy {

double to_double(const Rational& r, Rounding dir) {
  double d = r.convert_to<double>();
  if (dir == Rounding::Up) {
    while (Rational(d) < r) d = next_up(d);
  } else if (dir == Rounding::Down) {
    while (Rational(d) > r) d = next_down(d);
  }
  return d;
}

Rational rational_pow(Rational base, unsigned exponent) {
  Rational out = 1;
  while (exponent > 0) {
    if (exponent & 1u) out *= base;
    base *= base;
    exponent >>= 1u;
  }
  return out;
}

}  // namespace rauzy
