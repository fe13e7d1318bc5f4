#include "rauzy/transition.hpp"

#include <Eigen/SparseLU>
#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <deque>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>

#include "rauzy/series.hpp"
#include "rauzy/simplex.hpp"

namespace rauzy {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double exponent_p(double delta, Rounding dir) {
  return SeriesParams{1, delta}.exponent_p(dir);
}

// Forward error envelope of one nearest-mode sparse matvec with nonnegative
// data: true value within a factor (1 +- gamma) of the computed one.
double matvec_gamma(const Eigen::SparseMatrix<double>& m, int max_row_entries) {
  (void)m;
  return kEps * (2.0 * max_row_entries + 8.0);
}

int max_row_nnz(const Eigen::SparseMatrix<double>& m) {
  std::vector<int> counts(static_cast<std::size_t>(m.rows()), 0);
  for (int c = 0; c < m.outerSize(); ++c) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(m, c); it; ++it) {
      ++counts[static_cast<std::size_t>(it.row())];
    }
  }
  int best = 0;
  for (int v : counts) best = std::max(best, v);
  return best;
}

std::vector<char> reachable_from_star(const Eigen::SparseMatrix<double>& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::deque<int> queue;
  seen[0] = 1;
  queue.push_back(0);
  while (!queue.empty()) {
    const int c = queue.front();
    queue.pop_front();
    for (Eigen::SparseMatrix<double>::InnerIterator it(m, c); it; ++it) {
      const int r = static_cast<int>(it.row());
      if (!seen[static_cast<std::size_t>(r)]) {
        seen[static_cast<std::size_t>(r)] = 1;
        queue.push_back(r);
      }
    }
  }
  return seen;
}

}  // namespace

Rational edge_base(const Word& w, int j) {
  const Rational q = max_coordinate_of(word_matrix(w), j);
  return Rational(1) / (Rational(2) - q);
}

double transition_entry(const Word& w, int j, double delta, Rounding dir, double slack) {
  const Rational base = edge_base(w, j);
  // base < 1 strictly, so a bound from `dir` pairs the base rounded with
  // `dir` and the exponent rounded the other way.
  return pow_dir(to_double(base, dir), exponent_p(delta, opposite(dir)), dir, slack);
}

TransitionSkeleton build_skeleton(int m, int threads) {
  TransitionSkeleton out;
  out.states = std::make_shared<const StateSpace>(m);
  const StateSpace& states = *out.states;
  const int words = states.size() - 1;
  out.edges.resize(static_cast<std::size_t>(words) * 3);

  auto fill = [&](int lo, int hi) {
    for (int i = lo; i < hi; ++i) {
      const auto verts = vertices_of(word_matrix(states.word_at(i)));
      for (int j = 1; j <= 3; ++j) {
        const Rational base = Rational(1) / (Rational(2) - max_coordinate(verts, j));
        auto& e = out.edges[static_cast<std::size_t>(i) * 3 + static_cast<std::size_t>(j - 1)];
        e.col = i;
        e.row = states.successor_index(i, j);
        e.base_up = to_double(base, Rounding::Up);
        e.base_down = to_double(base, Rounding::Down);
      }
    }
  };

  if (threads <= 1 || words < 256) {
    fill(0, words);
  } else {
    const int chunk = 128;
    std::atomic<int> next{0};
    auto worker = [&] {
      while (true) {
        const int lo = next.fetch_add(chunk);
        if (lo >= words) return;
        fill(lo, std::min(words, lo + chunk));
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::vector<int> row_counts(static_cast<std::size_t>(states.size()), 0);
  for (const auto& e : out.edges) ++row_counts[static_cast<std::size_t>(e.row)];
  out.max_row_entries = *std::max_element(row_counts.begin(), row_counts.end());
  return out;
}

SparseTransition build_B(const TransitionSkeleton& skeleton, double delta, double slack) {
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in (0,1)");
  const int n = skeleton.states->size();
  const double p_down = exponent_p(delta, Rounding::Down);

  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(skeleton.edges.size());
  for (const auto& e : skeleton.edges) {
    triplets.emplace_back(e.row, e.col, pow_dir(e.base_up, p_down, Rounding::Up, slack));
  }
  SparseTransition out;
  out.m = skeleton.m();
  out.delta = delta;
  out.slack = slack;
  out.matrix.resize(n, n);
  out.matrix.setFromTriplets(triplets.begin(), triplets.end());
  out.matrix.makeCompressed();
  return out;
}

SparseTransition build_B(int m, double delta, double slack, int threads) {
  return build_B(build_skeleton(m, threads), delta, slack);
}

FirstFactor first_factor(const SparseTransition& B, double tol, double abort_above,
                         int max_steps) {
  FirstFactor out;
  const int n = B.dim();
  const int target = B.m_state();
  const double gamma = matvec_gamma(B.matrix, max_row_nnz(B.matrix));

  Eigen::VectorXd s = Eigen::VectorXd::Zero(n);
  s(B.star()) = 1.0;

  double infl = 1.0;  // (1+gamma)^t envelope: true B^t e <= s_t * infl
  double defl = 1.0;
  double acc_up = 0.0, acc_down = 0.0, acc = 0.0;
  double theta_up = std::numeric_limits<double>::infinity();
  double tail_up = std::numeric_limits<double>::infinity();
  std::deque<double> norms = {1.0};

  int step = 0;
  bool contracted = false;
  while (step < max_steps) {
    ++step;
    s = B.matrix * s;
    infl = next_up(infl * (1.0 + gamma));
    defl = next_down(defl * (1.0 - gamma));
    acc = acc + s(target);
    acc_up = add_dir(acc_up, mul_dir(s(target), infl, Rounding::Up), Rounding::Up);
    acc_down = add_dir(acc_down, std::max(0.0, mul_dir(s(target), defl, Rounding::Down)),
                       Rounding::Down);
    norms.push_back(s.lpNorm<1>());
    if (norms.size() > 21) norms.pop_front();

    if (abort_above > 0.0 && acc_down > abort_above) {
      out.aborted_above = true;
      break;
    }

    // The decay window must clear the transient before the empirical ratio
    // is meaningful, hence the minimum step count before any tail break.
    if ((step % 16 == 0 && step >= 48) || step == max_steps) {
      if (norms.back() == 0.0) {  // series terminated exactly
        theta_up = 0.0;
        tail_up = 0.0;
        contracted = true;
        break;
      }
      const Eigen::VectorXd u = B.matrix * s;
      double ratio = 0.0;
      bool valid = true;
      for (int i = 0; i < n; ++i) {
        if (s(i) > 0.0) {
          ratio = std::max(ratio, u(i) / s(i));
        } else if (u(i) > 0.0) {
          valid = false;  // support still growing; no contraction certificate yet
          break;
        }
      }
      if (valid) {
        const double cand = next_up(ratio * (1.0 + gamma + 4.0 * kEps));
        if (cand < 1.0) {
          theta_up = cand;
          contracted = true;
          // tail at the target component: s * infl dominates the true
          // iterate, then the geometric envelope theta/(1-theta).
          const double geom =
              div_dir(theta_up, sub_dir(1.0, theta_up, Rounding::Down), Rounding::Up);
          tail_up = mul_dir(geom, mul_dir(s(target), infl, Rounding::Up), Rounding::Up);
          if (tail_up <= tol) break;
        }
      }
    }
  }
  out.steps = step;
  out.neumann_sum = acc;
  out.lower = acc_down;
  out.contraction = contracted ? theta_up : std::numeric_limits<double>::infinity();

  // Empirical l1 decay over the last window, and the power-norm bound the
  // spec uses to sanity-check it.
  double q_emp = 0.0;
  for (std::size_t i = 1; i < norms.size(); ++i) {
    if (norms[i - 1] > 0.0) q_emp = std::max(q_emp, norms[i] / norms[i - 1]);
  }
  out.empirical_decay = q_emp;
  {
    const int powers = std::max(1, B.m + 1);
    Eigen::VectorXd v = Eigen::VectorXd::Ones(n);
    for (int i = 0; i < powers; ++i) v = B.matrix * v;
    out.power_norm_decay = std::pow(v.lpNorm<Eigen::Infinity>(), 1.0 / powers);
  }

  if (out.aborted_above) {
    out.upper = std::numeric_limits<double>::infinity();
    return out;
  }

  const bool neumann_usable =
      contracted && out.empirical_decay <= out.power_norm_decay * (1.0 + 1e-9);
  if (neumann_usable) {
    out.neumann_bound = add_dir(acc_up, tail_up, Rounding::Up);
  } else {
    out.neumann_bound = std::numeric_limits<double>::infinity();
  }

  // Direct sparse solve with one refinement pass, certified by a
  // supersolution built from the contraction iterate.
  out.solve_bound = std::numeric_limits<double>::infinity();
  if (contracted && theta_up < 1.0) {
    Eigen::SparseMatrix<double> A(n, n);
    A.setIdentity();
    A = (A - B.matrix).eval();
    A.makeCompressed();
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
    lu.compute(A);
    if (lu.info() == Eigen::Success) {
      Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
      e(B.star()) = 1.0;
      Eigen::VectorXd x = lu.solve(e);
      x += lu.solve(e - A * x);  // iterative refinement

      const auto supp = reachable_from_star(B.matrix);
      bool ok = true;
      for (int i = 0; i < n; ++i) {
        const bool in_supp = supp[static_cast<std::size_t>(i)] != 0;
        if (!in_supp && i != B.star()) x(i) = 0.0;
        if (in_supp && x(i) < 0.0) ok = false;
      }
      if (x(B.star()) < 0.0) ok = false;
      if (ok) {
        // Componentwise residual upper bound: computed residual plus the
        // rounding envelope of its evaluation.
        const Eigen::VectorXd r = e - A * x;
        const Eigen::VectorXd mag = e + B.matrix * x + x;
        const double gr = kEps * (max_row_nnz(B.matrix) + 6.0);
        // The star row of B is zero, so the star component of any
        // supersolution only needs to reach 1; a deficit there leaks into
        // the other components through the star column, bounded by the
        // entries (< 1 each) times the deficit.
        const double d_star = std::max(0.0, sub_dir(1.0, x(B.star()), Rounding::Up));
        double eta = 0.0;
        const double one_minus_theta = sub_dir(1.0, theta_up, Rounding::Down);
        for (int i = 0; i < n; ++i) {
          if (i == B.star()) continue;
          if (!supp[static_cast<std::size_t>(i)]) continue;
          const double r_up = add_dir(add_dir(r(i), gr * mag(i), Rounding::Up), d_star,
                                      Rounding::Up);
          if (r_up <= 0.0) continue;
          if (s(i) <= 0.0) {
            eta = std::numeric_limits<double>::infinity();
            break;
          }
          eta = std::max(eta, div_dir(r_up, mul_dir(one_minus_theta, s(i), Rounding::Down),
                                      Rounding::Up));
        }
        if (std::isfinite(eta)) {
          out.solve_value = x(target);
          out.solve_bound =
              add_dir(x(target), mul_dir(eta, s(target), Rounding::Up), Rounding::Up);
          out.solve_ok = true;
        }
      }
    }
  }

  out.upper = std::min(out.neumann_bound, out.solve_bound);
  if (!std::isfinite(out.upper)) {
    out.diverged = true;
    out.upper = std::numeric_limits<double>::infinity();
  }
  return out;
}

double spectral_radius_estimate(const SparseTransition& B, int iterations) {
  const int n = B.dim();
  Eigen::VectorXd v = Eigen::VectorXd::Constant(n, 1.0 / n);
  double estimate = 0.0;
  for (int i = 0; i < iterations; ++i) {
    Eigen::VectorXd w = B.matrix * v;
    const double norm = w.lpNorm<1>();
    if (norm == 0.0) return 0.0;
    estimate = norm / v.lpNorm<1>();
    v = w / norm;
  }
  return estimate;
}

TruncatedD build_truncated_D(int m, double delta, long K, int threads) {
  if (K < m + 10) throw std::invalid_argument("truncation cutoff must be at least m + 10");
  TruncatedD out;
  out.B = build_B(m, delta, kPowSlack, threads);
  out.cutoff = K;
  const SeriesParams params = make_series_params(m, delta);
  out.a.reserve(static_cast<std::size_t>(K - m + 1));
  out.b.reserve(static_cast<std::size_t>(K - m));
  for (long k = m; k <= K; ++k) out.a.push_back(a_k(params, k, Rounding::Nearest));
  for (long k = m; k < K; ++k) out.b.push_back(b_k(params, k, Rounding::Nearest));
  return out;
}

std::vector<double> TruncatedD::return_weights(int P) const {
  // Occupancy of the non-star states after t steps, never re-entering star;
  // a return edge a_k then closes a cycle of length t+1.
  const int n = B.dim();
  const int target = B.m_state();
  const std::size_t chain_len = a.size() - 1;  // states m+1 .. K
  std::vector<double> weights(static_cast<std::size_t>(P) + 1, 0.0);

  Eigen::VectorXd y = Eigen::VectorXd::Zero(n);
  y(B.star()) = 1.0;
  y = B.matrix * y;
  std::vector<double> chain(chain_len, 0.0);
  for (int t = 1; t < P; ++t) {
    double closing = a[0] * y(target);
    for (std::size_t i = 0; i < chain_len; ++i) closing += a[i + 1] * chain[i];
    weights[static_cast<std::size_t>(t) + 1] = closing;
    std::vector<double> next_chain(chain_len, 0.0);
    if (chain_len > 0) {
      next_chain[0] = b[0] * y(target);
      for (std::size_t i = 1; i < chain_len; ++i) next_chain[i] = b[i] * chain[i - 1];
    }
    y = B.matrix * y;
    chain.swap(next_chain);
  }
  return weights;
}

double TruncatedD::return_sum(int P) const {
  const auto weights = return_weights(P);
  double acc = 0.0;
  for (double w : weights) acc += w;
  return acc;
}

double TruncatedD::power_sum(int P) const {
  const int n = B.dim();
  const int target = B.m_state();
  const std::size_t chain_len = a.size() - 1;

  Eigen::VectorXd z = Eigen::VectorXd::Zero(n);
  z(B.star()) = 1.0;
  std::vector<double> chain(chain_len, 0.0);
  double acc = 0.0;
  for (int t = 1; t <= P; ++t) {
    double star_in = a[0] * z(target);
    for (std::size_t i = 0; i < chain_len; ++i) star_in += a[i + 1] * chain[i];
    std::vector<double> next_chain(chain_len, 0.0);
    if (chain_len > 0) {
      next_chain[0] = b[0] * z(target);
      for (std::size_t i = 1; i < chain_len; ++i) next_chain[i] = b[i] * chain[i - 1];
    }
    z = (B.matrix * z).eval();
    z(B.star()) += star_in;
    chain.swap(next_chain);
    acc += z(B.star());
  }
  return acc;
}

void export_matrix_market(const SparseTransition& B, std::ostream& os) {
  std::size_t nnz = static_cast<std::size_t>(B.matrix.nonZeros());
  os << "%%rauzy transition matrix\n";
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%% m %d delta %.17g slack %.17g\n", B.m, B.delta, B.slack);
  os << buf;
  os << B.dim() << " " << B.dim() << " " << nnz << "\n";
  for (int c = 0; c < B.matrix.outerSize(); ++c) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(B.matrix, c); it; ++it) {
      std::snprintf(buf, sizeof(buf), "%ld %ld %.30g\n", static_cast<long>(it.row()) + 1,
                    static_cast<long>(it.col()) + 1, it.value());
      os << buf;
    }
  }
}

SparseTransition import_matrix_market(std::istream& is) {
  SparseTransition out;
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("empty matrix file");
  if (!std::getline(is, line)) throw std::runtime_error("missing parameter header");
  {
    std::istringstream hs(line);
    std::string percent, key;
    hs >> percent;
    while (hs >> key) {
      if (key == "m") hs >> out.m;
      else if (key == "delta") hs >> out.delta;
      else if (key == "slack") hs >> out.slack;
    }
  }
  long rows = 0, cols = 0, nnz = 0;
  if (!(is >> rows >> cols >> nnz)) throw std::runtime_error("missing dimension line");
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(static_cast<std::size_t>(nnz));
  for (long i = 0; i < nnz; ++i) {
    long r = 0, c = 0;
    double v = 0.0;
    if (!(is >> r >> c >> v)) throw std::runtime_error("truncated triplet list");
    triplets.emplace_back(static_cast<int>(r - 1), static_cast<int>(c - 1), v);
  }
  out.matrix.resize(static_cast<int>(rows), static_cast<int>(cols));
  out.matrix.setFromTriplets(triplets.begin(), triplets.end());
  out.matrix.makeCompressed();
  return out;
}

}  // namespace rauzy
