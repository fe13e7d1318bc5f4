#pragma once

#include "rauzy/rational.hpp"
#include "rauzy/rounding.hpp"

namespace rauzy {
namespace appendix {

// Evaluators for the monotonicity argument behind the diameter contraction
// exponent: the operator-norm envelope f, the normalised g (increasing on
// [0,1] with g(1) = 1), the derivative numerator h, and the square root
// alpha with its exact Taylor sandwich.

// alpha(t)^2 = t^2 - 5t + 7 exactly.
Rational alpha_squared(const Rational& t);
double alpha(double t, Rounding dir);

double f_envelope(double t, Rounding dir);
double g_normalised(double t, Rounding dir);
double h_numerator(double t, Rounding dir);

// Degree-3 lower and degree-2 upper Taylor polynomials of alpha at t = 1:
// numerators over 16*sqrt(3) and 8*sqrt(3) respectively.
Rational taylor_lower_numerator(const Rational& t);   // t^3 - t^2 - 25t + 73
Rational taylor_upper_numerator(const Rational& t);   // t^2 - 14t + 37

// Exact check of taylor_lower/(16 sqrt 3) <= alpha(t) <= taylor_upper/(8 sqrt 3)
// at a rational point, comparing squares so no roots are taken.
bool taylor_sandwich_holds(const Rational& t);

// Polynomial lower bound on h obtained by substituting the Taylor sandwich
// into h according to the sign of each alpha coefficient; positive on
// [0, 1) and zero at 1, which is what makes g increasing.
double h_polynomial_lower(double t, Rounding dir);

}  // namespace appendix
}  // namespace rauzy
