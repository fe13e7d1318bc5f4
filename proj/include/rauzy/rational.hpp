#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "rauzy/rounding.hpp"

namespace rauzy {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact directed conversion: the returned double provably bounds r from the
// requested side (verified against the exact rational, not trusted to the
// conversion routine).
double to_double(const Rational& r, Rounding dir);

Rational rational_pow(Rational base, unsigned exponent);

}  // namespace rauzy
