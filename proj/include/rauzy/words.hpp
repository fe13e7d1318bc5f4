#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

#include "rauzy/word.hpp"

namespace rauzy {

// The index set V of canonical (m+1)-prefixes, the equivalence by symbol
// permutation, the adjacency used by the transition matrix, and the
// partition of length-n words into prefix classes, run classes and constant
// words.

// Unique representative under symbol permutations: distinct symbols appear
// in first-occurrence order 1, 2, 3. Idempotent.
Word canonicalize(const Word& w);

// The full permutation (indexable by symbol 1..3) witnessing
// canonicalize(w): unseen symbols take the remaining labels in ascending
// order, so the result is always a bijection on {1,2,3}.
std::array<int, 4> canonical_permutation(const Word& w);

// Length of the maximal constant prefix.
int leading_run(const Word& w);

// (1, 2^m), the renewal state.
Word star_word(int m);

// All words 1^k 2 t with 1 <= k <= m-1 and t over {1,2,3}^{m-k}, ordered by
// k ascending then tail lexicographic. Size (3^m - 3)/2. Requires m >= 2.
std::vector<Word> enumerate_V(int m);

// A node of the transition graph: either a word of V or a number state
// k >= m (k > m occurs only in the truncated infinite-matrix oracle).
struct StateIndex {
  enum class Kind { WordState, NumberState };
  Kind kind = Kind::NumberState;
  Word word;
  long number = 0;

  static StateIndex of(const Word& w) { return {Kind::WordState, w, 0}; }
  static StateIndex number_state(long k) { return {Kind::NumberState, Word{}, k}; }
  bool is_word() const { return kind == Kind::WordState; }
  friend bool operator==(const StateIndex&, const StateIndex&) = default;
};

// Adjacency: for j = 1 the leading run grows (reaching the number state m
// from run length m-1); for j = 2,3 the canonical representative of the
// shifted word, which lands in V_1.
StateIndex successor(const Word& v, int j, int m);

// Dense indexing of V united with the number state m: the star word is
// index 0, the m-state is last (index N-1), and the remaining words of V
// keep their (k, tail) enumeration order in between.
class StateSpace {
 public:
  explicit StateSpace(int m);

  int m() const { return m_; }
  int size() const { return static_cast<int>(words_.size()) + 1; }  // N = |V| + 1
  int star() const { return 0; }
  int m_state() const { return size() - 1; }

  const Word& word_at(int index) const { return words_[static_cast<std::size_t>(index)]; }
  int index_of(const Word& w) const;
  int successor_index(int word_index, int j) const {
    return successors_[static_cast<std::size_t>(word_index)][static_cast<std::size_t>(j - 1)];
  }

 private:
  int natural_rank(const Word& w) const;

  int m_;
  std::vector<Word> words_;                       // index -> word, star first
  std::vector<std::array<int, 3>> successors_;    // word index x j -> state index
  int star_rank_;                                 // rank of star in (k, tail) order
};

struct PartitionTag {
  enum class Kind { WordClass, RunClass, ConstantWords };
  Kind kind = Kind::ConstantWords;
  Word word;   // canonical prefix, WordClass only
  int k = 0;   // leading-run length, RunClass only

  static PartitionTag word_class(const Word& v) { return {Kind::WordClass, v, 0}; }
  static PartitionTag run_class(int k) { return {Kind::RunClass, Word{}, k}; }
  static PartitionTag constant_words() { return {}; }

  friend bool operator==(const PartitionTag&, const PartitionTag&) = default;
  friend std::strong_ordering operator<=>(const PartitionTag&, const PartitionTag&) = default;

  std::string str() const;
};

// Routes a word of length n > m to exactly one class: the constant words,
// the run class of its leading run k when m <= k <= n-1, or the word class
// of its canonical (m+1)-prefix.
PartitionTag classify(const Word& w, int m);

// |A_{n,v}| = 2 * 3^(n-m) for every v in V.
std::uint64_t class_count(int n, int m);

}  // namespace rauzy
