#pragma once

#include <cstdint>

#include "rauzy/rounding.hpp"

namespace rauzy {

// The scalar weights a_k, b_k of the number-state chain and the certified
// evaluation of the tail series sum_{k>=m} a_k prod_{i=m}^{k-1} b_i.

struct SeriesParams {
  int m = 2;
  double delta = 0.5;

  // 3*delta + lambda*(1-delta); > 1 exactly when delta is above the
  // summability threshold.
  double exponent_p(Rounding dir) const;
  // lambda*(1-delta).
  double exponent_q(Rounding dir) const;
};

// Validates m >= 1 and 0 < delta < 1.
SeriesParams make_series_params(int m, double delta);

// a_k = ((k+1)/(2k+1))^p + 8^{-delta} ((k+1)/(2k+1))^q.
double a_k(const SeriesParams& params, long long k, Rounding dir);

// b_k = ((k+2)/(k+3))^p, strictly below 1.
double b_k(const SeriesParams& params, long long k, Rounding dir);

// Telescoped product prod_{i=m}^{k-1} b_i = ((m+2)/(k+2))^p.
double b_product_closed(const SeriesParams& params, long long k, Rounding dir);

struct SecondFactor {
  double upper = 0.0;       // partial sum plus tail bound, all upward
  double partial = 0.0;     // upward partial sum to the cutoff
  double tail_bound = 0.0;  // integral-comparison bound on the rest
  long long cutoff = 0;     // last summed index K
};

// Certified upper bound on the tail series, summed to an adaptively chosen
// cutoff with the remainder bounded by integral comparison per monomial
// part. Throws std::domain_error when p <= 1 (series not summable) and
// std::runtime_error when the requested tolerance is unreachable.
SecondFactor second_factor(const SeriesParams& params, double tolerance, int threads = 1);

}  // namespace rauzy
