#include <doctest.h>

#include <cmath>

#include "rauzy/solver.hpp"

using namespace rauzy;

TEST_CASE("configuration validation") {
  BoundConfig cfg;
  cfg.m = 1;
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
  cfg.m = 2;
  cfg.bracket_lo = 0.01;  // below the summability threshold
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
  cfg.bracket_lo = 0.9;
  cfg.bracket_hi = 0.5;
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
}

TEST_CASE("condition value straddles 1 around the published root") {
  BoundConfig cfg;
  cfg.m = 2;
  CHECK(condition_lhs(cfg, 0.83) <= 1.0);
  CHECK(condition_lhs(cfg, 0.82) > 1.0);

  // threshold guard fires before any series work
  CHECK_THROWS_AS(condition_lhs(cfg, 0.03), std::invalid_argument);
  CHECK_THROWS_AS(condition_lhs(cfg, delta_threshold(Rounding::Up)), std::invalid_argument);

  double prev = std::numeric_limits<double>::infinity();
  for (double delta : {0.6, 0.7, 0.8, 0.9}) {
    const double cur = condition_lhs(cfg, delta);
    CHECK(cur <= prev + 1e-9);
    prev = cur;
  }
}

TEST_CASE("single-delta evaluation reports") {
  BoundConfig cfg;
  cfg.m = 2;
  const BoundReport holds = evaluate_condition(cfg, 0.9);
  CHECK(holds.verdict == Verdict::Holds);
  CHECK(holds.lhs <= 1.0);
  CHECK(holds.factor1 > 0.0);
  CHECK(holds.factor2 > 0.0);
  CHECK(holds.m == 2);

  const BoundReport fails = evaluate_condition(cfg, 0.5);
  CHECK(fails.verdict == Verdict::Fails);
  CHECK(fails.lhs > 1.0);
}

TEST_CASE("bisection reproduces the small published bounds") {
  BoundConfig cfg;
  cfg.m = 2;
  const BoundReport r2 = solve_delta(cfg);
  CHECK(r2.verdict == Verdict::Holds);
  CHECK(r2.delta == doctest::Approx(0.8285).epsilon(1e-12));
  CHECK(r2.lhs <= 1.0);
  CHECK(r2.iterations > 2);

  cfg.m = 3;
  const BoundReport r3 = solve_delta(cfg);
  CHECK(r3.delta == doctest::Approx(0.7982).epsilon(1e-12));
  CHECK(1.0 + r3.delta == doctest::Approx(1.7982).epsilon(1e-12));
  CHECK(dimension_bound(cfg) == doctest::Approx(1.7982).epsilon(1e-12));
}

TEST_CASE("certified verdicts survive a tightened tolerance") {
  BoundConfig cfg;
  cfg.m = 2;
  const BoundReport r = solve_delta(cfg);
  BoundConfig tight = cfg;
  tight.series_tol = cfg.series_tol / 100.0;
  CHECK(condition_lhs(tight, r.delta) <= 1.0);
}

TEST_CASE("identical configuration gives identical reports") {
  BoundConfig cfg;
  cfg.m = 2;
  const BoundReport a = solve_delta(cfg);
  const BoundReport b = solve_delta(cfg);
  CHECK(a.delta == b.delta);
  CHECK(a.factor1 == b.factor1);
  CHECK(a.factor2 == b.factor2);
  CHECK(a.lhs == b.lhs);
  CHECK(a.iterations == b.iterations);

  // thread count must not change any numeric output
  BoundConfig threaded = cfg;
  threaded.threads = 4;
  const BoundReport c = solve_delta(threaded);
  CHECK(c.delta == a.delta);
  CHECK(c.lhs == a.lhs);
}

TEST_CASE("brackets that do not straddle are rejected with diagnostics") {
  BoundConfig cfg;
  cfg.m = 2;
  cfg.bracket_lo = 0.9;  // condition already holds here
  cfg.bracket_hi = 0.99;
  CHECK_THROWS_AS(solve_delta(cfg), std::runtime_error);

  cfg.bracket_lo = 0.5;
  cfg.bracket_hi = 0.62;  // condition still fails here
  CHECK_THROWS_AS(solve_delta(cfg), std::runtime_error);
}

TEST_CASE("table driver capture per-m failures") {
  BoundConfig cfg;
  const auto rows = solve_table(cfg, 2, 3);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].ok);
  CHECK(rows[1].ok);
  CHECK(1.0 + rows[0].report.delta == doctest::Approx(1.8285).epsilon(1e-12));
  CHECK(1.0 + rows[1].report.delta == doctest::Approx(1.7982).epsilon(1e-12));
}
