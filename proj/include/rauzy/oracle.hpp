#pragma once

#include <map>
#include <string>
#include <vector>

#include "rauzy/rounding.hpp"
#include "rauzy/words.hpp"

namespace rauzy {

// Brute-force verification at small n of the inequalities the bound rests
// on: the cover sums and their partition, the area/diameter/coordinate
// estimates, the number and word recursions, and the appendix monotonicity
// facts. A reported "holds" is conservative: the favourable rounding
// direction is applied to each side, and a comparison too tight for double
// resolution is counted as indeterminate rather than as a violation.

struct OracleConfig {
  int enumeration_cap = 12;
  int threads = 1;
};

struct CoverSum {
  int n = 0;
  int m = 0;
  double delta = 0.0;
  double xn = 0.0;                           // upward-rounded
  std::map<PartitionTag, double> components; // upward-rounded, present when n > m
};

// Full enumeration of words of length n; components are classified when
// n > m. Rejects n above the enumeration cap with a cost estimate.
CoverSum compute_cover_sums(int n, double delta, int m, const OracleConfig& cfg = {});

// X_1 .. X_n_max as certified two-sided values, from one enumeration pass.
struct SeriesPoint {
  double lower = 0.0;
  double upper = 0.0;
};
std::vector<SeriesPoint> xn_series(int n_max, double delta, int m, const OracleConfig& cfg = {});

// c_n = 6 area(T_2 T_1^n Delta)^delta diam(...)^{1-delta}.
double c_n(int n, double delta, Rounding dir);

struct LemmaReport {
  std::string lemma;
  int n = 0;
  int m = 0;
  double delta = 0.0;
  long long checked = 0;
  long long indeterminate = 0;       // too tight for double resolution, not violations
  double worst_slack = 0.0;          // min over checks of (bound - value), directed
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

// Area estimate: area(j i)/area(i) <= (2 - max x_j)^{-3}, exact rationals
// on both sides, words of length <= n.
LemmaReport verify_area_estimate(int n, const OracleConfig& cfg = {});

// Diameter estimate: diam(j i)/diam(i) <= (2 - max x_j)^{-lambda}, directed.
LemmaReport verify_diameter_estimate(int n, const OracleConfig& cfg = {});

// Run-class coordinate bounds: the three displayed inequalities on A_{n,k},
// exact where rational, directed for the two-term power bound.
LemmaReport verify_coordinate_bounds(int n, double delta, const OracleConfig& cfg = {});

// Number recursion: X_{n+1,k+1} <= b_k X_{n,k} for k in [m, n-1].
LemmaReport verify_number_lemma(int n, double delta, int m, const OracleConfig& cfg = {});

// Word recursion: X_{n+1,star} <= c_n + sum a_k X_{n,k} and
// X_{n+1,v} <= sum_w B_{v,w} X_{n,w} for v != star.
LemmaReport verify_word_lemma(int n, double delta, int m, const OracleConfig& cfg = {});

// Disk-cover accounting at every level <= n: integer disk counts, and the
// algebraic identity sum (diam^2/area)(4 area/diam)^{1+delta} = 4^{1+delta} X_n.
LemmaReport verify_cover_construction(int n, double delta, const OracleConfig& cfg = {});

// Appendix: g increasing on a grid with g(1) = 1 and g(0) < 1, the exact
// rational Taylor sandwich for alpha, and h against its polynomial lower
// bound.
LemmaReport verify_appendix(int grid_points = 10000, int rational_points = 1000);

// Partition bookkeeping: classify totality, class sizes against the closed
// formula, and the partition identity sum of components = X_n.
LemmaReport verify_partition(int n, double delta, int m, const OracleConfig& cfg = {});

// Informational spot check of the renewal comparison
// X_{n+m+1,star} >= (2^(lambda-3))^((1+delta)(m+1)) X_n.
LemmaReport verify_renewal_comparison(int n, double delta, int m, const OracleConfig& cfg = {});

}  // namespace rauzy
