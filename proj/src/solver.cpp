#include "rauzy/solver.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "rauzy/series.hpp"

namespace rauzy {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double now_ms() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

void check_probe(const BoundConfig& cfg, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in (0,1)");
  if (delta <= delta_threshold(Rounding::Up)) {
    throw std::invalid_argument("delta at or below the summability threshold (1-lambda)/(3-lambda)");
  }
  (void)cfg;
}

struct ProbeResult {
  double lhs = kInf;
  double factor1 = 0.0;
  double factor2 = 0.0;
  bool diverged = false;
};

ProbeResult probe(const BoundConfig& cfg, const TransitionSkeleton& skeleton, double delta,
                  double tol) {
  check_probe(cfg, delta);
  ProbeResult out;
  const SeriesParams params = make_series_params(cfg.m, delta);

  // A certified lower bound on the second factor (its first term) turns the
  // abort level for the first factor into a rigorous early "fails" exit at
  // strongly failing deltas, where the Neumann series grows without bound.
  const double f2_lower = a_k(params, cfg.m, Rounding::Down);
  const double abort_above = f2_lower > 0.0 ? 2.0 / f2_lower : 0.0;

  const SparseTransition B = build_B(skeleton, delta, cfg.slack);
  const FirstFactor f1 = first_factor(B, tol, abort_above);
  out.factor1 = f1.upper;
  out.diverged = f1.diverged;
  if (f1.diverged || f1.aborted_above || !std::isfinite(f1.upper)) {
    out.lhs = kInf;
    return out;
  }

  // Away from the decision boundary a coarse certified series bound already
  // settles the verdict; the full tolerance is only spent near 1, where the
  // tail exponent is comfortably summable.
  const double coarse_tol = std::max(tol, 1e-4);
  SecondFactor f2 = second_factor(params, coarse_tol, cfg.threads);
  double lhs = mul_dir(f1.upper, f2.upper, Rounding::Up);
  if (coarse_tol > tol && std::abs(lhs - 1.0) <= 1e-2) {
    f2 = second_factor(params, tol, cfg.threads);
    lhs = mul_dir(f1.upper, f2.upper, Rounding::Up);
  }
  out.factor2 = f2.upper;
  out.lhs = lhs;
  return out;
}

}  // namespace

BoundConfig validate(const BoundConfig& cfg) {
  if (cfg.m < 2) throw std::invalid_argument("m must be at least 2");
  if (!(cfg.bracket_lo < cfg.bracket_hi) || !(cfg.bracket_hi <= 1.0)) {
    throw std::invalid_argument("invalid delta bracket");
  }
  if (cfg.bracket_lo <= delta_threshold(Rounding::Up)) {
    throw std::invalid_argument("bracket must stay above the summability threshold");
  }
  if (!(cfg.bisect_tol > 0.0) || !(cfg.series_tol > 0.0) || !(cfg.slack >= 0.0)) {
    throw std::invalid_argument("tolerances must be positive");
  }
  if (cfg.decimal_places < 1 || cfg.decimal_places > 12) {
    throw std::invalid_argument("decimal places out of range");
  }
  if (cfg.threads < 1) throw std::invalid_argument("thread count must be positive");
  return cfg;
}

double condition_lhs(const BoundConfig& cfg_in, double delta) {
  const BoundConfig cfg = validate(cfg_in);
  const TransitionSkeleton skeleton = build_skeleton(cfg.m, cfg.threads);
  return probe(cfg, skeleton, delta, cfg.series_tol).lhs;
}

BoundReport evaluate_condition(const BoundConfig& cfg_in, double delta) {
  const BoundConfig cfg = validate(cfg_in);
  const double t0 = now_ms();
  const TransitionSkeleton skeleton = build_skeleton(cfg.m, cfg.threads);
  const ProbeResult r = probe(cfg, skeleton, delta, cfg.series_tol);
  BoundReport report;
  report.m = cfg.m;
  report.delta = delta;
  report.factor1 = r.factor1;
  report.factor2 = r.factor2;
  report.lhs = r.lhs;
  report.diverged = r.diverged;
  report.verdict = r.lhs <= 1.0 ? Verdict::Holds : Verdict::Fails;
  report.iterations = 0;
  report.wall_ms = now_ms() - t0;
  return report;
}

BoundReport solve_delta(const BoundConfig& cfg_in) {
  const BoundConfig cfg = validate(cfg_in);
  const double t0 = now_ms();
  const TransitionSkeleton skeleton = build_skeleton(cfg.m, cfg.threads);

  auto probe_tol = [&](double width) {
    return std::max(cfg.series_tol, std::min(1e-4, width / 64.0));
  };

  double lo = cfg.bracket_lo;
  double hi = cfg.bracket_hi;
  const double lhs_lo = probe(cfg, skeleton, lo, probe_tol(hi - lo)).lhs;
  const double lhs_hi = probe(cfg, skeleton, hi, probe_tol(hi - lo)).lhs;
  if (!(lhs_lo > 1.0) || !(lhs_hi <= 1.0)) {
    std::ostringstream msg;
    msg << "bracket endpoints do not straddle 1: lhs(" << lo << ") = " << lhs_lo << ", lhs("
        << hi << ") = " << lhs_hi << "; widen the bracket";
    throw std::runtime_error(msg.str());
  }

  int iterations = 2;
  double last_lo_lhs = lhs_lo;  // monotonicity watch: lhs at lo side stays above the hi side
  double last_hi_lhs = lhs_hi;
  // Bracket width two decimal orders below the reporting resolution.
  const double width = std::min(cfg.bisect_tol, std::pow(10.0, -(cfg.decimal_places + 2)));
  while (hi - lo > width) {
    const double mid = 0.5 * (lo + hi);
    const double lhs_mid = probe(cfg, skeleton, mid, probe_tol(hi - lo)).lhs;
    ++iterations;
    if (lhs_mid <= 1.0) {
      hi = mid;
      last_hi_lhs = lhs_mid;
    } else {
      lo = mid;
      last_lo_lhs = lhs_mid;
    }
    // The paper asserts the LHS is decreasing in delta; a crossed pair of
    // probe values would invalidate the bisection, so it is checked live.
    if (last_lo_lhs < last_hi_lhs) {
      throw std::logic_error("condition LHS not monotone across the bracket");
    }
  }

  // Report the upper endpoint rounded upwards, then re-certify at full
  // tolerance at exactly the reported delta.
  double reported = round_up_decimals(hi, cfg.decimal_places);
  ProbeResult final_probe = probe(cfg, skeleton, reported, cfg.series_tol);
  ++iterations;
  if (final_probe.lhs > 1.0) {
    reported += std::pow(10.0, -cfg.decimal_places);
    final_probe = probe(cfg, skeleton, reported, cfg.series_tol);
    ++iterations;
    if (final_probe.lhs > 1.0) {
      throw std::logic_error("failed to certify the rounded-up delta");
    }
  }

  BoundReport report;
  report.m = cfg.m;
  report.delta = reported;
  report.factor1 = final_probe.factor1;
  report.factor2 = final_probe.factor2;
  report.lhs = final_probe.lhs;
  report.verdict = Verdict::Holds;
  report.diverged = false;
  report.iterations = iterations;
  report.wall_ms = now_ms() - t0;
  return report;
}

double dimension_bound(const BoundConfig& cfg) { return 1.0 + solve_delta(cfg).delta; }

std::vector<TableRow> solve_table(const BoundConfig& base, int m_lo, int m_hi) {
  std::vector<TableRow> rows;
  for (int m = m_lo; m <= m_hi; ++m) {
    TableRow row;
    row.m = m;
    try {
      BoundConfig cfg = base;
      cfg.m = m;
      row.report = solve_delta(cfg);
      row.ok = true;
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace rauzy
