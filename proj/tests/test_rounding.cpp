#include <doctest.h>

#include <cmath>

#include "rauzy/rational.hpp"
#include "rauzy/rounding.hpp"

using namespace rauzy;

namespace {

// Small deterministic generator for test inputs.
struct Lcg {
  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  std::uint64_t next() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state >> 11;
  }
  double uniform() { return static_cast<double>(next() % 1000003) / 1000003.0; }
};

}  // namespace

TEST_CASE("directed arithmetic brackets the exact result") {
  Lcg rng;
  for (int i = 0; i < 500; ++i) {
    const double a = rng.uniform() * 10.0 + 1e-3;
    const double b = rng.uniform() * 10.0 + 1e-3;
    const Rational ra(a), rb(b);
    CHECK(Rational(add_dir(a, b, Rounding::Up)) >= ra + rb);
    CHECK(Rational(add_dir(a, b, Rounding::Down)) <= ra + rb);
    CHECK(Rational(sub_dir(a, b, Rounding::Up)) >= ra - rb);
    CHECK(Rational(sub_dir(a, b, Rounding::Down)) <= ra - rb);
    CHECK(Rational(mul_dir(a, b, Rounding::Up)) >= ra * rb);
    CHECK(Rational(mul_dir(a, b, Rounding::Down)) <= ra * rb);
    CHECK(Rational(div_dir(a, b, Rounding::Up)) >= ra / rb);
    CHECK(Rational(div_dir(a, b, Rounding::Down)) <= ra / rb);
    const double s_up = sqrt_dir(a, Rounding::Up);
    const double s_down = sqrt_dir(a, Rounding::Down);
    CHECK(Rational(s_up) * Rational(s_up) >= ra);
    CHECK(Rational(s_down) * Rational(s_down) <= ra);
  }
}

TEST_CASE("pow_dir sandwich and exact short-circuits") {
  CHECK(pow_dir(1.0, 2.345, Rounding::Up) == 1.0);
  CHECK(pow_dir(0.73, 0.0, Rounding::Down) == 1.0);
  CHECK(pow_dir(0.73, 1.0, Rounding::Up) == 0.73);
  Lcg rng;
  for (int i = 0; i < 200; ++i) {
    const double b = rng.uniform() * 1.9 + 0.05;
    const double e = rng.uniform() * 6.0 - 3.0;
    const double lo = pow_dir(b, e, Rounding::Down);
    const double mid = pow_dir(b, e, Rounding::Nearest);
    const double hi = pow_dir(b, e, Rounding::Up);
    CHECK(lo <= mid);
    CHECK(mid <= hi);
    CHECK(hi <= mid * (1.0 + 1e-11));
    CHECK(lo >= mid * (1.0 - 1e-11));
  }
}

TEST_CASE("lambda and the summability threshold") {
  const double l = lambda_exponent(Rounding::Nearest);
  CHECK(l == doctest::Approx(1.5 - 1.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(lambda_exponent(Rounding::Down) <= l);
  CHECK(l <= lambda_exponent(Rounding::Up));
  CHECK(lambda_exponent(Rounding::Up) - lambda_exponent(Rounding::Down) < 1e-14);

  const double t = delta_threshold(Rounding::Nearest);
  CHECK(t == doctest::Approx(0.0372351).epsilon(1e-5));
  CHECK(delta_threshold(Rounding::Down) <= t);
  CHECK(t <= delta_threshold(Rounding::Up));
}

TEST_CASE("reported constants under upward decimal rounding") {
  // lambda = 0.92264973... and the threshold 0.0372351... as reported.
  CHECK(round_up_decimals(lambda_exponent(Rounding::Up), 5) == doctest::Approx(0.92265).epsilon(1e-12));
  CHECK(round_up_decimals(delta_threshold(Rounding::Up), 4) == doctest::Approx(0.0373).epsilon(1e-12));
}

TEST_CASE("round_up_decimals") {
  CHECK(round_up_decimals(0.82841, 4) == doctest::Approx(0.8285).epsilon(1e-12));
  CHECK(round_up_decimals(0.8285, 4) == doctest::Approx(0.8285).epsilon(1e-12));
  CHECK(round_up_decimals(0.74147, 4) == doctest::Approx(0.7415).epsilon(1e-12));
  CHECK(round_up_decimals(1.00001, 4) == doctest::Approx(1.0001).epsilon(1e-12));
}

TEST_CASE("exact directed conversion from rationals") {
  Lcg rng;
  for (int i = 0; i < 300; ++i) {
    const long num = static_cast<long>(rng.next() % 1000000) - 500000;
    const long den = static_cast<long>(rng.next() % 999983) + 1;
    const Rational r(num, den);
    const double up = to_double(r, Rounding::Up);
    const double down = to_double(r, Rounding::Down);
    CHECK(Rational(up) >= r);
    CHECK(Rational(down) <= r);
    CHECK(up - down <= std::abs(up) * 1e-15 + 1e-300);
  }
  CHECK(to_double(Rational(1, 3), Rounding::Up) > 1.0 / 3.0 - 1e-17);
  CHECK(to_double(Rational(0), Rounding::Up) == 0.0);
}
