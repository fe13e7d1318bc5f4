#include <doctest.h>

#include <map>
#include <set>

#include "rauzy/enumerate.hpp"
#include "rauzy/words.hpp"

using namespace rauzy;

namespace {

Word apply_perm(const Word& w, const std::array<int, 3>& perm) {
  Word out;
  for (int i = 0; i < w.size(); ++i) out = out.append(perm[static_cast<std::size_t>(w[i] - 1)]);
  return out;
}

const std::array<std::array<int, 3>, 6> kPerms = {
    {{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}}};

}  // namespace

TEST_CASE("canonicalize relabels by first occurrence") {
  CHECK(canonicalize(Word::of({3, 1, 1, 2})) == Word::of({1, 2, 2, 3}));
  CHECK(canonicalize(star_word(4)) == star_word(4));
  for (int j = 1; j <= 3; ++j) {
    CHECK(canonicalize(Word::constant(j, 5)) == Word::constant(1, 5));
  }

  enumerate_words(6, [](const Word& w, const IntegerMatrix3&) {
    const Word c = canonicalize(w);
    CHECK(canonicalize(c) == c);
    for (const auto& perm : kPerms) CHECK(canonicalize(apply_perm(w, perm)) == c);
  });
}

TEST_CASE("index set enumeration") {
  CHECK_THROWS_AS(enumerate_V(1), std::invalid_argument);

  const auto v2 = enumerate_V(2);
  REQUIRE(v2.size() == 3);
  CHECK(v2[0] == Word::of({1, 2, 1}));
  CHECK(v2[1] == Word::of({1, 2, 2}));
  CHECK(v2[2] == Word::of({1, 2, 3}));

  for (int m = 2; m <= 9; ++m) {
    std::size_t expect = 1;
    for (int i = 0; i < m; ++i) expect *= 3;
    expect = (expect - 3) / 2;
    CHECK(enumerate_V(m).size() == expect);
  }
  CHECK(enumerate_V(9).size() == 9840);

  for (const Word& v : enumerate_V(6)) CHECK(canonicalize(v) == v);
}

TEST_CASE("adjacency") {
  // m = 2 cases.
  CHECK(successor(Word::of({1, 2, 2}), 1, 2) == StateIndex::number_state(2));
  CHECK(successor(Word::of({1, 2, 2}), 2, 2) == StateIndex::of(Word::of({1, 2, 1})));
  CHECK(successor(Word::of({1, 2, 2}), 3, 2) == StateIndex::of(Word::of({1, 2, 3})));

  for (int m = 2; m <= 5; ++m) {
    const Word star = star_word(m);
    std::map<Word, int> in_degree;
    int m_state_in = 0;
    for (const Word& v : enumerate_V(m)) {
      std::set<StateIndex::Kind> kinds;
      std::set<std::uint64_t> targets;
      for (int j = 1; j <= 3; ++j) {
        const StateIndex s = successor(v, j, m);
        if (s.is_word()) {
          // the shift rule lands in V_1
          if (j != 1) {
            CHECK(s.word[0] == 1);
            CHECK(s.word[1] == 2);
          }
          ++in_degree[s.word];
          targets.insert(s.word.code());
          CHECK(canonicalize(s.word) == s.word);
        } else {
          CHECK(s.number == m);
          CHECK(leading_run(v) == m - 1);
          CHECK(j == 1);
          ++m_state_in;
          targets.insert(~0ull);
        }
        kinds.insert(s.kind);
      }
      CHECK(targets.size() == 3);  // out-degree exactly 3, all distinct
    }
    CHECK(in_degree.find(star) == in_degree.end());  // star has in-degree 0
    // the m-state is fed only by the run growth out of V_{m-1}
    std::size_t v_m_minus_1 = 1;
    for (int i = 0; i < m - (m - 1); ++i) v_m_minus_1 *= 3;
    CHECK(static_cast<std::size_t>(m_state_in) == v_m_minus_1);
  }
}

TEST_CASE("state space indexing") {
  for (int m = 2; m <= 6; ++m) {
    const StateSpace states(m);
    std::size_t v_size = 1;
    for (int i = 0; i < m; ++i) v_size *= 3;
    v_size = (v_size - 3) / 2;
    CHECK(states.size() == static_cast<int>(v_size) + 1);
    CHECK(states.star() == 0);
    CHECK(states.m_state() == states.size() - 1);
    CHECK(states.word_at(0) == star_word(m));
    for (int i = 0; i < states.size() - 1; ++i) {
      CHECK(states.index_of(states.word_at(i)) == i);
    }
    // adjacency agrees with the word-level rule
    for (int i = 0; i < states.size() - 1; ++i) {
      for (int j = 1; j <= 3; ++j) {
        const StateIndex s = successor(states.word_at(i), j, m);
        const int expect = s.is_word() ? states.index_of(s.word) : states.m_state();
        CHECK(states.successor_index(i, j) == expect);
      }
    }
  }
  // m = 2 keeps the enumeration order around the star swap.
  const StateSpace s2(2);
  CHECK(s2.word_at(1) == Word::of({1, 2, 1}));
  CHECK(s2.word_at(2) == Word::of({1, 2, 3}));
}

TEST_CASE("classification") {
  CHECK_THROWS_AS(classify(Word::of({1, 2}), 2), std::invalid_argument);

  // run length 2 = m routes to the run class
  CHECK(classify(Word::of({1, 1, 2, 3, 1}), 2) == PartitionTag::run_class(2));
  // run length below m routes to the canonical prefix class
  CHECK(classify(Word::of({1, 2, 2, 2, 2}), 2) == PartitionTag::word_class(star_word(2)));
  CHECK(classify(Word::of({3, 3, 3, 3}), 2) == PartitionTag::constant_words());

  for (int m = 2; m <= 3; ++m) {
    for (int n = m + 1; n <= 6; ++n) {
      std::map<PartitionTag, std::uint64_t> counts;
      std::uint64_t total = 0;
      enumerate_words(n, [&](const Word& w, const IntegerMatrix3&) {
        if (w.size() != n) return;
        const PartitionTag tag = classify(w, m);
        if (tag.kind == PartitionTag::Kind::WordClass) {
          CHECK(canonicalize(tag.word) == tag.word);
          CHECK(tag.word.size() == m + 1);
        } else if (tag.kind == PartitionTag::Kind::RunClass) {
          CHECK(tag.k >= m);
          CHECK(tag.k <= n - 1);
        }
        ++counts[tag];
        ++total;
      });
      std::uint64_t expect_total = 1;
      for (int i = 0; i < n; ++i) expect_total *= 3;
      CHECK(total == expect_total);

      std::uint64_t covered = 0;
      for (const auto& [tag, count] : counts) {
        covered += count;
        if (tag.kind == PartitionTag::Kind::WordClass) CHECK(count == class_count(n, m));
        if (tag.kind == PartitionTag::Kind::ConstantWords) CHECK(count == 3);
      }
      CHECK(covered == expect_total);
      // every prefix class is populated
      std::size_t v_size = 1;
      for (int i = 0; i < m; ++i) v_size *= 3;
      v_size = (v_size - 3) / 2;
      std::size_t word_classes = 0;
      for (const auto& [tag, count] : counts) {
        if (tag.kind == PartitionTag::Kind::WordClass) ++word_classes;
      }
      CHECK(word_classes == v_size);
    }
  }
}

TEST_CASE("class count formula") {
  CHECK(class_count(3, 2) == 6);
  CHECK(class_count(4, 2) == 18);
  CHECK_THROWS_AS(class_count(2, 2), std::invalid_argument);
}

TEST_CASE("classification is total on the full depth-10 cube") {
  // Plain odometer, no matrices: 3^10 words against three prefix sizes.
  for (int m : {2, 5, 9}) {
    std::array<int, 10> digits;
    digits.fill(1);
    std::uint64_t total = 0;
    std::uint64_t by_kind[3] = {0, 0, 0};
    while (true) {
      Word w;
      for (int d : digits) w = w.append(d);
      const PartitionTag tag = classify(w, m);
      ++by_kind[static_cast<int>(tag.kind)];
      ++total;
      int pos = 9;
      while (pos >= 0 && digits[static_cast<std::size_t>(pos)] == 3) {
        digits[static_cast<std::size_t>(pos)] = 1;
        --pos;
      }
      if (pos < 0) break;
      ++digits[static_cast<std::size_t>(pos)];
    }
    CHECK(total == 59049);
    CHECK(by_kind[static_cast<int>(PartitionTag::Kind::ConstantWords)] == 3);
    CHECK(by_kind[0] + by_kind[1] + by_kind[2] == 59049);
  }
}

TEST_CASE("successor is consistent with prefix classification") {
  for (int m = 2; m <= 3; ++m) {
    for (int n = m + 1; n <= m + 3; ++n) {
      enumerate_words(n, [&](const Word& w, const IntegerMatrix3&) {
        if (w.size() != n) return;
        const PartitionTag tag = classify(w, m);
        if (tag.kind != PartitionTag::Kind::WordClass) return;
        const auto perm = canonical_permutation(w.prefix(m + 1));
        for (int j = 1; j <= 3; ++j) {
          const PartitionTag next = classify(w.prepend(j), m);
          const StateIndex s = successor(tag.word, perm[static_cast<std::size_t>(j)], m);
          if (next.kind == PartitionTag::Kind::WordClass) {
            REQUIRE(s.is_word());
            CHECK(s.word == next.word);
          } else {
            // the run grew to m: the successor is the number state
            REQUIRE(next.kind == PartitionTag::Kind::RunClass);
            CHECK(next.k == m);
            CHECK(s == StateIndex::number_state(m));
          }
        }
      });
    }
  }
}

TEST_CASE("word packing") {
  const Word w = Word::of({1, 2, 3, 1});
  CHECK(w.size() == 4);
  CHECK(w[0] == 1);
  CHECK(w[2] == 3);
  CHECK(w.prepend(2) == Word::of({2, 1, 2, 3, 1}));
  CHECK(w.append(2) == Word::of({1, 2, 3, 1, 2}));
  CHECK(w.prefix(2) == Word::of({1, 2}));
  CHECK(w.drop_last() == Word::of({1, 2, 3}));
  CHECK(w.str() == "1231");
  CHECK(Word::of({1, 2}) < Word::of({1, 3}));
  CHECK(Word::of({1}) < Word::of({1, 1}));
  CHECK_THROWS_AS(Word::of({4}), std::invalid_argument);
  CHECK_THROWS_AS(Word::constant(1, 41), std::length_error);
}
