// Command-line frontend: certified dimension bounds, the reproduction
// table, the brute-force lemma suites, gasket rendering and matrix export.
//
// Exit codes: 0 success, 1 failed verdict or lemma violation, 2 usage,
// 3 internal error. Results go to stdout, progress to stderr.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "rauzy/json_io.hpp"
#include "rauzy/oracle.hpp"
#include "rauzy/render.hpp"
#include "rauzy/series.hpp"
#include "rauzy/solver.hpp"
#include "rauzy/transition.hpp"

namespace {

using rauzy::BoundConfig;
using rauzy::BoundReport;
using rauzy::LemmaReport;
using rauzy::OracleConfig;
using rauzy::Rounding;
using rauzy::Verdict;

struct GlobalOptions {
  std::string format = "text";
  std::string output;
  int threads = 1;
  double series_tol = 1e-8;
  double bisect_tol = 1e-6;
  double slack = rauzy::kPowSlack;
  int places = 4;
  int cap = 12;
};

std::string fmt(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return std::string(buf);
}

// Writes to --output or stdout.
int with_output(const GlobalOptions& g, const std::function<void(std::ostream&)>& body) {
  if (g.output.empty()) {
    body(std::cout);
    return 0;
  }
  std::ofstream os(g.output, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open output path: " + g.output);
  body(os);
  if (!os) throw std::runtime_error("write failed: " + g.output);
  return 0;
}

BoundConfig make_config(const GlobalOptions& g, int m) {
  BoundConfig cfg;
  cfg.m = m;
  cfg.series_tol = g.series_tol;
  cfg.bisect_tol = g.bisect_tol;
  cfg.slack = g.slack;
  cfg.decimal_places = g.places;
  cfg.threads = g.threads;
  return rauzy::validate(cfg);
}

void warn_large_m(int m) {
  if (m > 12) {
    std::cerr << "warning: m = " << m << " needs about " << (std::pow(3.0, m) - 3) / 2
              << " states; expect heavy memory use\n";
  }
}

std::pair<int, int> parse_m_range(const std::string& spec) {
  const auto dots = spec.find("..");
  if (dots == std::string::npos) {
    const int m = std::stoi(spec);
    return {m, m};
  }
  const int lo = std::stoi(spec.substr(0, dots));
  const int hi = std::stoi(spec.substr(dots + 2));
  return {lo, hi};
}

int cmd_bound(const GlobalOptions& g, int m, double delta, bool has_delta) {
  const BoundConfig cfg = make_config(g, m);
  warn_large_m(m);
  BoundReport report;
  if (has_delta) {
    std::cerr << "evaluating condition at m=" << m << " delta=" << delta << "\n";
    report = rauzy::evaluate_condition(cfg, delta);
  } else {
    std::cerr << "solving for the minimal certified delta at m=" << m << "\n";
    report = rauzy::solve_delta(cfg);
  }
  with_output(g, [&](std::ostream& os) {
    if (g.format == "json") {
      os << rauzy::to_json(report).dump(2) << "\n";
    } else if (has_delta) {
      os << "m " << m << "  delta " << fmt(delta, 6) << "  lhs "
         << (std::isfinite(report.lhs) ? fmt(report.lhs, 9) : std::string("divergent"))
         << "  verdict " << (report.verdict == Verdict::Holds ? "holds" : "fails") << "\n";
    } else {
      os << "dim_H <= " << fmt(1.0 + report.delta, g.places) << "\n";
    }
  });
  return report.verdict == Verdict::Holds ? 0 : 1;
}

int cmd_table(const GlobalOptions& g, const std::string& range) {
  const auto [lo, hi] = parse_m_range(range);
  if (lo > hi) {
    return with_output(g, [&](std::ostream& os) {
      if (g.format == "json") os << "[]\n";
      else if (g.format == "csv") os << "m,dimension_bound\n";
    });
  }
  warn_large_m(hi);
  BoundConfig base = make_config(g, std::max(lo, 2));
  std::vector<rauzy::TableRow> rows;
  for (int m = lo; m <= hi; ++m) {
    std::cerr << "solving m = " << m << " ...\n";
    auto part = rauzy::solve_table(base, m, m);
    rows.push_back(part.front());
    if (part.front().ok) {
      std::cerr << "  delta_" << m << " + 1 = " << fmt(1.0 + part.front().report.delta, g.places)
                << "  (" << fmt(part.front().report.wall_ms / 1000.0, 2) << " s)\n";
    } else {
      std::cerr << "  failed: " << part.front().error << "\n";
    }
  }
  with_output(g, [&](std::ostream& os) {
    if (g.format == "json") {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& row : rows) {
        nlohmann::json item{{"m", row.m}, {"ok", row.ok}};
        if (row.ok) item["report"] = rauzy::to_json(row.report);
        else item["error"] = row.error;
        arr.push_back(item);
      }
      os << arr.dump(2) << "\n";
    } else if (g.format == "csv") {
      os << "m,dimension_bound\n";
      for (const auto& row : rows) {
        if (row.ok) os << row.m << "," << fmt(1.0 + row.report.delta, g.places) << "\n";
        else os << row.m << ",error\n";
      }
    } else {
      os << " m | delta_m + 1\n";
      os << "---+------------\n";
      for (const auto& row : rows) {
        if (row.ok) {
          os << " " << row.m << " | " << fmt(1.0 + row.report.delta, g.places) << "\n";
        } else {
          os << " " << row.m << " | failed: " << row.error << "\n";
        }
      }
    }
  });
  for (const auto& row : rows) {
    if (!row.ok) return 1;
  }
  return 0;
}

int cmd_verify(const GlobalOptions& g, const std::string& suite, int n, int m, double delta) {
  OracleConfig cfg;
  cfg.enumeration_cap = g.cap;
  cfg.threads = g.threads;
  std::vector<LemmaReport> reports;

  const bool lemmas = suite == "lemmas" || suite == "all";
  if (lemmas || suite == "area") reports.push_back(rauzy::verify_area_estimate(n, cfg));
  if (lemmas || suite == "diameter") reports.push_back(rauzy::verify_diameter_estimate(n, cfg));
  if (lemmas || suite == "coordinates")
    reports.push_back(rauzy::verify_coordinate_bounds(n, delta, cfg));
  if (lemmas || suite == "number") reports.push_back(rauzy::verify_number_lemma(n - 1, delta, m, cfg));
  if (lemmas || suite == "word") reports.push_back(rauzy::verify_word_lemma(n - 1, delta, m, cfg));
  if (suite == "cover" || suite == "all")
    reports.push_back(rauzy::verify_cover_construction(n, delta, cfg));
  if (suite == "partition" || suite == "all")
    reports.push_back(rauzy::verify_partition(std::max(n, m + 1), delta, m, cfg));
  if (suite == "appendix" || suite == "all") reports.push_back(rauzy::verify_appendix());
  if (suite == "renewal" || suite == "all")
    reports.push_back(rauzy::verify_renewal_comparison(std::min(n, 4), delta, m, cfg));
  if (suite == "xn" || suite == "all") {
    // X_n series report rides along as CSV-style text or JSON.
    const auto series = rauzy::xn_series(n, delta, m, cfg);
    with_output(g, [&](std::ostream& os) {
      if (g.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (std::size_t i = 0; i < series.size(); ++i) {
          arr.push_back({{"n", i + 1},
                         {"lower", rauzy::annotated(series[i].lower, Rounding::Down)},
                         {"upper", rauzy::annotated(series[i].upper, Rounding::Up)}});
        }
        os << arr.dump(2) << "\n";
      } else {
        os << "n,xn_lower,xn_upper\n";
        for (std::size_t i = 0; i < series.size(); ++i) {
          os << (i + 1) << "," << fmt(series[i].lower, 12) << "," << fmt(series[i].upper, 12)
             << "\n";
        }
      }
    });
    if (suite == "xn") return 0;
  }
  if (reports.empty()) throw std::invalid_argument("unknown suite: " + suite);

  long long violations = 0;
  with_output(g, [&](std::ostream& os) {
    if (g.format == "json") {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : reports) arr.push_back(rauzy::to_json(r));
      os << arr.dump(2) << "\n";
    } else {
      for (const auto& r : reports) {
        os << r.lemma << ": checked " << r.checked << ", violations " << r.violations.size();
        if (r.indeterminate > 0) os << ", indeterminate " << r.indeterminate;
        os << ", worst slack " << fmt(r.worst_slack, 9) << "\n";
        for (const auto& v : r.violations) os << "  VIOLATION " << v << "\n";
      }
    }
  });
  for (const auto& r : reports) violations += static_cast<long long>(r.violations.size());
  return violations == 0 ? 0 : 1;
}

int cmd_render(const GlobalOptions& g, int n) {
  return with_output(g, [&](std::ostream& os) { rauzy::render_gasket_svg(n, os, g.cap); });
}

int cmd_export_matrix(const GlobalOptions& g, int m, double delta) {
  warn_large_m(m);
  const auto B = rauzy::build_B(m, delta, g.slack, g.threads);
  return with_output(g, [&](std::ostream& os) { rauzy::export_matrix_market(B, os); });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified upper bounds on the Hausdorff dimension of the Rauzy gasket"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML-style configuration file");

  GlobalOptions g;
  app.add_option("--format", g.format, "Output format: text|json|csv")
      ->envname("RAUZY_FORMAT")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--output", g.output, "Write results to this path instead of stdout")
      ->envname("RAUZY_OUTPUT");
  app.add_option("--threads", g.threads, "Worker threads for enumeration and series")
      ->envname("RAUZY_THREADS")
      ->check(CLI::PositiveNumber);
  app.add_option("--series-tol", g.series_tol, "Certification tolerance of each factor")
      ->envname("RAUZY_SERIES_TOL");
  app.add_option("--bisect-tol", g.bisect_tol, "Final bisection bracket width")
      ->envname("RAUZY_BISECT_TOL");
  app.add_option("--slack", g.slack, "Multiplicative rounding slack per transcendental power")
      ->envname("RAUZY_SLACK");
  app.add_option("--places", g.places, "Decimal places for reported bounds")
      ->envname("RAUZY_PLACES");
  app.add_option("--cap", g.cap, "Enumeration cap for oracle suites")
      ->envname("RAUZY_CAP");

  auto* bound = app.add_subcommand("bound", "Certified dimension bound for one m");
  bound->fallthrough();
  int bound_m = 9;
  double bound_delta = 0.0;
  bound->add_option("--m", bound_m, "Index of the bound (m >= 2)")->required();
  auto* delta_opt = bound->add_option("--delta", bound_delta, "Evaluate the condition at this delta");

  auto* table = app.add_subcommand("table", "Bounds for a range of m");
  table->fallthrough();
  std::string table_range = "2..9";
  table->add_option("--m", table_range, "Range, e.g. 2..9 or a single value");

  auto* verify = app.add_subcommand("verify", "Brute-force lemma suites");
  verify->fallthrough();
  std::string suite = "lemmas";
  int verify_n = 6;
  int verify_m = 2;
  double verify_delta = 0.8285;
  verify->add_option("--suite", suite,
                     "lemmas|area|diameter|coordinates|number|word|cover|partition|appendix|"
                     "renewal|xn|all");
  verify->add_option("--n", verify_n, "Maximum word length");
  verify->add_option("--m", verify_m, "Prefix-class parameter");
  verify->add_option("--delta", verify_delta, "Exponent used by the delta-dependent checks");

  auto* render = app.add_subcommand("render", "Emit the level-n triangles as SVG");
  render->fallthrough();
  int render_n = 5;
  render->add_option("--n", render_n, "Subdivision depth");

  auto* exportm = app.add_subcommand("export-matrix", "Dump the transition matrix");
  exportm->fallthrough();
  int export_m = 2;
  double export_delta = 0.8285;
  exportm->add_option("--m", export_m, "Matrix index")->required();
  exportm->add_option("--delta", export_delta, "Matrix exponent parameter")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (bound->parsed()) return cmd_bound(g, bound_m, bound_delta, delta_opt->count() > 0);
    if (table->parsed()) return cmd_table(g, table_range);
    if (verify->parsed()) return cmd_verify(g, suite, verify_n, verify_m, verify_delta);
    if (render->parsed()) return cmd_render(g, render_n);
    if (exportm->parsed()) return cmd_export_matrix(g, export_m, export_delta);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
