#pragma once

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

#include "rauzy/simplex.hpp"
#include "rauzy/word.hpp"

namespace rauzy {

// Depth-first enumeration of all words up to a given length, carrying the
// exact integer matrix of each node incrementally. The parallel variant
// partitions the tree at a fixed prefix depth of 2 and merges the per-task
// accumulators in a fixed order, so results are bitwise identical for every
// thread count.

template <class Visit>
void enumerate_subtree(Word w, IntegerMatrix3 m, int n_max, Visit&& visit) {
  if (w.size() >= n_max) return;
  for (int j = 1; j <= 3; ++j) {
    const Word child = w.append(j);
    const IntegerMatrix3 cm = (m * generator_matrix(j)).eval();
    visit(child, cm);
    enumerate_subtree(child, cm, n_max, visit);
  }
}

template <class Visit>
void enumerate_words(int n_max, Visit&& visit) {
  enumerate_subtree(Word{}, IntegerMatrix3::Identity(), n_max, visit);
}

// Accumulator must provide visit(word, matrix) and merge(const Acc&).
template <class Acc>
Acc enumerate_accumulate(int n_max, int threads, const Acc& prototype) {
  // Words of length 1 and 2 go into the first slot; each length-2 prefix
  // roots one subtree task.
  Acc head = prototype;
  std::vector<Word> roots;
  std::vector<IntegerMatrix3> root_matrices;
  for (int a = 1; a <= 3; ++a) {
    const Word wa = Word::of({a});
    const IntegerMatrix3 ma = generator_matrix(a);
    head.visit(wa, ma);
    if (n_max < 2) continue;
    for (int b = 1; b <= 3; ++b) {
      const Word wab = wa.append(b);
      const IntegerMatrix3 mab = (ma * generator_matrix(b)).eval();
      head.visit(wab, mab);
      roots.push_back(wab);
      root_matrices.push_back(mab);
    }
  }
  if (n_max <= 2) return head;

  std::vector<Acc> parts(roots.size(), prototype);
  auto run_task = [&](std::size_t i) {
    enumerate_subtree(roots[i], root_matrices[i], n_max,
                      [&](const Word& w, const IntegerMatrix3& m) { parts[i].visit(w, m); });
  };

  if (threads <= 1) {
    for (std::size_t i = 0; i < roots.size(); ++i) run_task(i);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= roots.size()) return;
        run_task(i);
      }
    };
    std::vector<std::thread> pool;
    const std::size_t n = std::min(static_cast<std::size_t>(threads), roots.size());
    for (std::size_t t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const Acc& part : parts) head.merge(part);
  return head;
}

}  // namespace rauzy
