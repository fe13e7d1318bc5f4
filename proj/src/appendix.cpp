#include "rauzy/appendix.hpp"

#include <algorithm>
#include <cmath>

namespace rauzy {
namespace appendix {

namespace {

// Two-sided directed pair; just enough machinery to track the sign-aware
// substitutions in h and its polynomial reduction.
struct Bounds {
  double lo = 0.0;
  double hi = 0.0;

  static Bounds exact(double v) { return {v, v}; }
  Bounds operator+(const Bounds& o) const {
    return {add_dir(lo, o.lo, Rounding::Down), add_dir(hi, o.hi, Rounding::Up)};
  }
  Bounds operator-(const Bounds& o) const {
    return {sub_dir(lo, o.hi, Rounding::Down), sub_dir(hi, o.lo, Rounding::Up)};
  }
  Bounds operator*(const Bounds& o) const {
    const double a = mul_dir(lo, o.lo, Rounding::Down);
    const double b = mul_dir(lo, o.hi, Rounding::Down);
    const double c = mul_dir(hi, o.lo, Rounding::Down);
    const double d = mul_dir(hi, o.hi, Rounding::Down);
    const double A = mul_dir(lo, o.lo, Rounding::Up);
    const double B = mul_dir(lo, o.hi, Rounding::Up);
    const double C = mul_dir(hi, o.lo, Rounding::Up);
    const double D = mul_dir(hi, o.hi, Rounding::Up);
    return {std::min(std::min(a, b), std::min(c, d)), std::max(std::max(A, B), std::max(C, D))};
  }
  double pick(Rounding dir) const { return dir == Rounding::Down ? lo : hi; }
};

Bounds sqrt3_bounds() { return {sqrt_dir(3.0, Rounding::Down), sqrt_dir(3.0, Rounding::Up)}; }

Bounds alpha_bounds(double t) {
  return {alpha(t, Rounding::Down), alpha(t, Rounding::Up)};
}

Bounds taylor_lower_bounds(double t) {
  const Bounds tt = Bounds::exact(t);
  const Bounds num = tt * tt * tt - tt * tt - Bounds::exact(25.0) * tt + Bounds::exact(73.0);
  const Bounds den = Bounds::exact(16.0) * sqrt3_bounds();
  return {div_dir(num.lo, den.hi, Rounding::Down), div_dir(num.hi, den.lo, Rounding::Up)};
}

Bounds taylor_upper_bounds(double t) {
  const Bounds tt = Bounds::exact(t);
  const Bounds num = tt * tt - Bounds::exact(14.0) * tt + Bounds::exact(37.0);
  const Bounds den = Bounds::exact(8.0) * sqrt3_bounds();
  return {div_dir(num.lo, den.hi, Rounding::Down), div_dir(num.hi, den.lo, Rounding::Up)};
}

// h with alpha replaced by the bounds `al`; shared by h itself (al = alpha)
// and the polynomial reduction (al = Taylor sandwich ends per sign).
Bounds h_with(double t, const Bounds& a_pos, const Bounds& a_neg) {
  const Bounds s3 = sqrt3_bounds();
  const Bounds tt = Bounds::exact(t);
  const Bounds c3 = Bounds::exact(6.0) - Bounds::exact(4.0) * s3;                 // t^3
  const Bounds c2a = Bounds::exact(4.0) * s3 - Bounds::exact(6.0);                // alpha t^2, positive
  const Bounds c2 = Bounds::exact(24.0) * s3 - Bounds::exact(39.0);               // t^2
  const Bounds c1a = Bounds::exact(24.0) - Bounds::exact(14.0) * s3;              // alpha t, negative
  const Bounds c1 = Bounds::exact(87.0) - Bounds::exact(48.0) * s3;               // t
  const Bounds c0a = Bounds::exact(16.0) * s3 - Bounds::exact(18.0);              // alpha, positive
  const Bounds c0 = Bounds::exact(28.0) * s3 - Bounds::exact(72.0);
  return c3 * tt * tt * tt + (c2a * a_pos + c2) * tt * tt + (c1a * a_neg + c1) * tt +
         c0a * a_pos + c0;
}

}  // namespace

Rational alpha_squared(const Rational& t) { return t * t - 5 * t + 7; }

double alpha(double t, Rounding dir) {
  const Rounding anti = opposite(dir);
  const double poly = add_dir(sub_dir(mul_dir(t, t, dir), mul_dir(5.0, t, anti), dir), 7.0, dir);
  return sqrt_dir(poly, dir);
}

double f_envelope(double t, Rounding dir) {
  if (dir == Rounding::Nearest) {
    const double al = std::sqrt(t * t - 5.0 * t + 7.0);
    const double num = 2.0 * t * t - 7.0 * t + 8.0 + 2.0 * (1.0 - t) * al;
    const double d = 2.0 - t;
    return num / (3.0 * d * d * d * d);
  }
  const Rounding anti = opposite(dir);
  const double num =
      add_dir(add_dir(sub_dir(mul_dir(2.0, mul_dir(t, t, dir), dir), mul_dir(7.0, t, anti), dir),
                      8.0, dir),
              mul_dir(mul_dir(2.0, sub_dir(1.0, t, dir), dir), alpha(t, dir), dir), dir);
  const double dd = sub_dir(2.0, t, anti);
  double den = 3.0;
  for (int i = 0; i < 4; ++i) den = mul_dir(den, dd, anti);
  return div_dir(num, den, dir);
}

double g_normalised(double t, Rounding dir) {
  if (dir == Rounding::Nearest) {
    const double two_lambda = 2.0 * lambda_exponent(Rounding::Nearest);
    return f_envelope(t, Rounding::Nearest) * std::pow(2.0 - t, two_lambda);
  }
  // 2 - t >= 1 on [0,1]: a bound from `dir` takes base and exponent from the
  // same side. Tighter slack than the default: the monotone grid resolves
  // gaps near t = 1 that sit just above 1e-13.
  const double base = sub_dir(2.0, t, dir);
  const double expo = mul_dir(2.0, lambda_exponent(dir), dir);
  return mul_dir(f_envelope(t, dir), pow_dir(base, expo, dir, 1e-14), dir);
}

double h_numerator(double t, Rounding dir) {
  const Bounds al = alpha_bounds(t);
  const Bounds h = h_with(t, al, al);
  return h.pick(dir);
}

Rational taylor_lower_numerator(const Rational& t) { return t * t * t - t * t - 25 * t + 73; }

Rational taylor_upper_numerator(const Rational& t) { return t * t - 14 * t + 37; }

bool taylor_sandwich_holds(const Rational& t) {
  const Rational a2 = alpha_squared(t);
  const Rational lo = taylor_lower_numerator(t);
  const Rational hi = taylor_upper_numerator(t);
  const bool lower_ok = lo <= 0 || lo * lo <= 768 * a2;  // (16 sqrt 3)^2 = 768
  const bool upper_ok = hi >= 0 && hi * hi >= 192 * a2;  // (8 sqrt 3)^2 = 192
  return lower_ok && upper_ok;
}

double h_polynomial_lower(double t, Rounding dir) {
  // Positive alpha coefficients take the lower Taylor polynomial, the
  // negative one takes the upper; the result lower-bounds h on [0,1].
  const Bounds h = h_with(t, taylor_lower_bounds(t), taylor_upper_bounds(t));
  return h.pick(dir);
}

}  // namespace appendix
}  // namespace rauzy
