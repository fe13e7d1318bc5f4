#pragma once

#include <Eigen/SparseCore>
#include <iosfwd>
#include <memory>
#include <vector>

#include "rauzy/rational.hpp"
#include "rauzy/rounding.hpp"
#include "rauzy/words.hpp"

namespace rauzy {

// The finite transition matrix B on V united with the m-state, with
// conservatively rounded entries, the certified Neumann/solve evaluation of
// its (m-state, star) resolvent entry, and a truncated build of the infinite
// extension used as a cross-check.

struct SparseTransition {
  int m = 0;
  double delta = 0.0;
  double slack = kPowSlack;
  Eigen::SparseMatrix<double> matrix;  // column-major; every entry upper-bounds the exact one

  int dim() const { return static_cast<int>(matrix.rows()); }
  int star() const { return 0; }
  int m_state() const { return dim() - 1; }
};

// Exact base of an edge weight: 1/(2 - max_{triangle(w)} x_j).
Rational edge_base(const Word& w, int j);

// One matrix entry (2 - max x_j)^{-(3*delta + lambda*(1-delta))} with the
// requested rounding; the coordinate max is exact.
double transition_entry(const Word& w, int j, double delta, Rounding dir,
                        double slack = kPowSlack);

// The delta-independent part of B for a fixed m: state space, edge list and
// directed conversions of the exact edge bases. Reused across bisection
// probes.
struct TransitionSkeleton {
  std::shared_ptr<const StateSpace> states;
  struct Edge {
    int col = 0;       // source state (word index)
    int row = 0;       // target state
    double base_up = 0.0;
    double base_down = 0.0;
  };
  std::vector<Edge> edges;  // sorted by (col, row)
  int max_row_entries = 0;

  int m() const { return states->m(); }
};

TransitionSkeleton build_skeleton(int m, int threads = 1);

SparseTransition build_B(const TransitionSkeleton& skeleton, double delta,
                         double slack = kPowSlack);
SparseTransition build_B(int m, double delta, double slack = kPowSlack, int threads = 1);

struct FirstFactor {
  double upper = 0.0;         // certified upper bound on the resolvent entry
  double lower = 0.0;         // certified lower bound (partial sums only)
  bool diverged = false;      // Neumann series not summable at this delta
  bool aborted_above = false; // partial sum already exceeded the abort level

  double solve_value = 0.0;   // direct-solve estimate
  double solve_bound = 0.0;   // certified upper bound from the solve route
  bool solve_ok = false;

  double neumann_sum = 0.0;   // partial Neumann sum (nearest arithmetic)
  double neumann_bound = 0.0; // certified upper bound from the Neumann route
  double contraction = 0.0;   // certified per-component ratio theta
  double empirical_decay = 0.0;      // l1 decay ratio over the last window
  double power_norm_decay = 0.0;     // ||B^{m+1} 1||_inf^{1/(m+1)}
  int steps = 0;
};

// Certified upper bound on sum_{k>=1} (B^k)_{m-state, star}, i.e. the
// (m-state, star) entry of (I-B)^{-1}. Primary route: sparse LU solve with
// iterative refinement and a residual-based supersolution certificate.
// Cross-checked against truncated Neumann summation whose tail is bounded by
// a certified contraction ratio. Divergence (spectral radius >= 1) is
// detected, not assumed away. If `abort_above` is finite and the certified
// lower bound exceeds it, the evaluation stops early with aborted_above set.
FirstFactor first_factor(const SparseTransition& B, double tol = 1e-9,
                         double abort_above = 0.0, int max_steps = 20000);

// Power-iteration estimate of the spectral radius; diagnostic only.
double spectral_radius_estimate(const SparseTransition& B, int iterations = 400);

// Truncation of the infinite matrix to V united with the number states
// m..K: the B block, the chain weights b_k and the return weights a_k.
struct TruncatedD {
  SparseTransition B;
  long cutoff = 0;              // K
  std::vector<double> a;        // a_m .. a_K
  std::vector<double> b;        // b_m .. b_{K-1}

  // Power sum of the (star, star) entry restricted to first-return cycles
  // (the renewal reading; converges from below to the factorised
  // condition's left-hand side as K and P grow).
  double return_sum(int P) const;

  // Literal power sum sum_{k<=P} (D^k)_{star,star} including multi-return
  // cycles; diagnostic only, diverges as P grows whenever the first-return
  // mass is near 1.
  double power_sum(int P) const;

  // Weight of length-k first-return cycles, k = 0..P (zero below k = m).
  std::vector<double> return_weights(int P) const;
};

TruncatedD build_truncated_D(int m, double delta, long K, int threads = 1);

// Text export of B as (row, col, value) with 30 significant digits, plus a
// header carrying the build parameters; import reproduces the matrix
// bit-exactly for regression fixtures.
void export_matrix_market(const SparseTransition& B, std::ostream& os);
SparseTransition import_matrix_market(std::istream& is);

}  // namespace rauzy
