#include "rauzy/series.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

namespace rauzy {

namespace {

// Upward-rounded term a_k * prod_{i=m}^{k-1} b_i of the tail series.
double term_up(const SeriesParams& params, long long k) {
  return mul_dir(a_k(params, k, Rounding::Up), b_product_closed(params, k, Rounding::Up),
                 Rounding::Up);
}

// Sums term_up over [lo, hi) in ascending order; blocks are combined in
// ascending order too, so the result is identical for every thread count.
double sum_range_up(const SeriesParams& params, long long lo, long long hi, int threads) {
  constexpr long long kBlock = 1 << 17;
  const long long count = hi - lo;
  if (threads <= 1 || count <= kBlock) {
    double acc = 0.0;
    for (long long k = lo; k < hi; ++k) acc = add_dir(acc, term_up(params, k), Rounding::Up);
    return acc;
  }
  const long long blocks = (count + kBlock - 1) / kBlock;
  std::vector<double> partial(static_cast<std::size_t>(blocks), 0.0);
  std::atomic<long long> next{0};
  auto worker = [&] {
    while (true) {
      const long long b = next.fetch_add(1);
      if (b >= blocks) return;
      const long long b_lo = lo + b * kBlock;
      const long long b_hi = std::min(hi, b_lo + kBlock);
      double acc = 0.0;
      for (long long k = b_lo; k < b_hi; ++k) acc = add_dir(acc, term_up(params, k), Rounding::Up);
      partial[static_cast<std::size_t>(b)] = acc;
    }
  };
  std::vector<std::thread> pool;
  const int n = std::min<long long>(threads, blocks);
  pool.reserve(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  double acc = 0.0;
  for (double v : partial) acc = add_dir(acc, v, Rounding::Up);
  return acc;
}

// Integral-comparison bound on sum_{k>K} of both monomial-dominated parts.
double tail_bound_up(const SeriesParams& params, long long K) {
  const double p_up = params.exponent_p(Rounding::Up);
  const double p_down = params.exponent_p(Rounding::Down);
  const double q_down = params.exponent_q(Rounding::Down);
  if (p_down <= 1.0) return std::numeric_limits<double>::infinity();

  // (k+1)/(2k+1) is decreasing, so its value at k = K+1 dominates the rest.
  const double r2_bound =
      div_dir(static_cast<double>(K + 2), static_cast<double>(2 * K + 3), Rounding::Up);
  const double mp2 = static_cast<double>(params.m + 2);

  // First part: ((k+1)(m+2)/((2k+1)(k+2)))^p <= C1 k^{-p}.
  const double c1_base = mul_dir(r2_bound, mp2, Rounding::Up);
  const double c1 =
      pow_dir(c1_base, c1_base >= 1.0 ? p_up : p_down, Rounding::Up);
  const double e1 = sub_dir(1.0, p_down, Rounding::Up);
  const double den1 = sub_dir(p_down, 1.0, Rounding::Down);
  const double tail1 = div_dir(
      mul_dir(c1, pow_dir(static_cast<double>(K), e1, Rounding::Up), Rounding::Up), den1,
      Rounding::Up);

  // Second part: 8^{-delta} ((k+1)/(2k+1))^q ((m+2)/(k+2))^p <= C2 k^{-s},
  // s = q + 3*delta.
  const double c8 = pow_dir(0.125, params.delta, Rounding::Up);
  const double c2 = mul_dir(
      mul_dir(c8, pow_dir(r2_bound, q_down, Rounding::Up), Rounding::Up),
      pow_dir(mp2, p_up, Rounding::Up), Rounding::Up);
  const double s2 =
      add_dir(q_down, mul_dir(3.0, params.delta, Rounding::Down), Rounding::Down);
  if (s2 <= 1.0) return std::numeric_limits<double>::infinity();
  const double e2 = sub_dir(1.0, s2, Rounding::Up);
  const double den2 = sub_dir(s2, 1.0, Rounding::Down);
  const double tail2 = div_dir(
      mul_dir(c2, pow_dir(static_cast<double>(K), e2, Rounding::Up), Rounding::Up), den2,
      Rounding::Up);

  return add_dir(tail1, tail2, Rounding::Up);
}

}  // namespace

double SeriesParams::exponent_p(Rounding dir) const {
  const double lam = lambda_exponent(dir);
  return add_dir(mul_dir(3.0, delta, dir), mul_dir(lam, sub_dir(1.0, delta, dir), dir), dir);
}

double SeriesParams::exponent_q(Rounding dir) const {
  return mul_dir(lambda_exponent(dir), sub_dir(1.0, delta, dir), dir);
}

SeriesParams make_series_params(int m, double delta) {
  if (m < 1) throw std::invalid_argument("series parameters need m >= 1");
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in (0,1)");
  return SeriesParams{m, delta};
}

double a_k(const SeriesParams& params, long long k, Rounding dir) {
  if (k < 1) throw std::invalid_argument("a_k requires k >= 1");
  const Rounding anti = opposite(dir);
  const double r = div_dir(static_cast<double>(k + 1), static_cast<double>(2 * k + 1), dir);
  // r < 1, so a bound from `dir` uses the exponent rounded the other way.
  const double t1 = pow_dir(r, params.exponent_p(anti), dir);
  const double t2 = mul_dir(pow_dir(0.125, params.delta, dir),
                            pow_dir(r, params.exponent_q(anti), dir), dir);
  return add_dir(t1, t2, dir);
}

double b_k(const SeriesParams& params, long long k, Rounding dir) {
  if (k < 1) throw std::invalid_argument("b_k requires k >= 1");
  const double r = div_dir(static_cast<double>(k + 2), static_cast<double>(k + 3), dir);
  return pow_dir(r, params.exponent_p(opposite(dir)), dir);
}

double b_product_closed(const SeriesParams& params, long long k, Rounding dir) {
  if (k < params.m) throw std::invalid_argument("product starts at k = m");
  const double r =
      div_dir(static_cast<double>(params.m + 2), static_cast<double>(k + 2), dir);
  return pow_dir(r, params.exponent_p(opposite(dir)), dir);
}

SecondFactor second_factor(const SeriesParams& params, double tolerance, int threads) {
  if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const double p_down = params.exponent_p(Rounding::Down);
  if (p_down <= 1.0) {
    throw std::domain_error("tail series not summable: 3*delta + lambda*(1-delta) <= 1");
  }

  // Rough feasibility estimate for the cutoff the tolerance demands.
  {
    const double c_est = std::pow(0.5 * (params.m + 2), p_down) * 2.0;
    const double k_est =
        std::exp(std::log(2.0 * c_est / (tolerance * (p_down - 1.0))) / (p_down - 1.0));
    if (k_est > 1e9) {
      throw std::runtime_error("series tolerance unreachable at this delta (cutoff > 1e9)");
    }
  }

  SecondFactor out;
  long long K = std::max<long long>(4096, 8LL * params.m);
  double partial = sum_range_up(params, params.m, K + 1, threads);
  double tail = tail_bound_up(params, K);
  while (tail > 0.5 * tolerance) {
    const long long next_K = K * 4;
    partial = add_dir(partial, sum_range_up(params, K + 1, next_K + 1, threads), Rounding::Up);
    K = next_K;
    tail = tail_bound_up(params, K);
    if (K > (1LL << 33)) throw std::runtime_error("series cutoff exploded");
  }
  out.partial = partial;
  out.tail_bound = tail;
  out.cutoff = K;
  out.upper = add_dir(partial, tail, Rounding::Up);
  return out;
}

}  // namespace rauzy
