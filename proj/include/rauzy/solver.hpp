#pragma once

#include <string>
#include <vector>

#include "rauzy/rounding.hpp"
#include "rauzy/transition.hpp"

namespace rauzy {

// Top-level criterion: the product of the resolvent entry and the tail
// series must not exceed 1; bisection on the monotone left-hand side finds
// the minimal certified delta for each m.

struct BoundConfig {
  int m = 2;
  double bracket_lo = 0.5;
  double bracket_hi = 0.99;
  double bisect_tol = 1e-6;   // final bracket width
  double series_tol = 1e-8;   // certification tolerance of each factor
  double slack = kPowSlack;   // multiplicative rounding slack per power
  int decimal_places = 4;
  int threads = 1;
};

BoundConfig validate(const BoundConfig& cfg);

enum class Verdict { Holds, Fails };

struct BoundReport {
  int m = 0;
  double delta = 0.0;      // delta probed, or delta_m rounded upwards
  double factor1 = 0.0;    // upward-rounded
  double factor2 = 0.0;    // upward-rounded
  double lhs = 0.0;        // upward-rounded product; +inf when divergent
  Verdict verdict = Verdict::Fails;
  bool diverged = false;   // Neumann series divergence at this delta
  int iterations = 0;      // bisection probes (0 for a single evaluation)
  double wall_ms = 0.0;

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

// Upward-rounded left-hand side of the condition at the given delta;
// +infinity signals divergence of the first factor (condition fails).
// Probing at or below the summability threshold is rejected before any
// series evaluation.
double condition_lhs(const BoundConfig& cfg, double delta);

// Full report for a single delta.
BoundReport evaluate_condition(const BoundConfig& cfg, double delta);

// Bisection for the minimal certified delta. Returns the upper endpoint
// rounded up to cfg.decimal_places; the returned delta is re-certified at
// full tolerance. Throws std::runtime_error when the bracket endpoints do
// not straddle 1.
BoundReport solve_delta(const BoundConfig& cfg);

// 1 + delta_m.
double dimension_bound(const BoundConfig& cfg);

// Reports for a range of m; per-m failures are captured as messages so the
// remaining rows still compute.
struct TableRow {
  int m = 0;
  bool ok = false;
  BoundReport report;
  std::string error;
};
std::vector<TableRow> solve_table(const BoundConfig& base, int m_lo, int m_hi);

}  // namespace rauzy
