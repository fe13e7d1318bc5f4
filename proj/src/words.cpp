#include "rauzy/words.hpp"

#include <stdexcept>

namespace rauzy {

Word canonicalize(const Word& w) {
  const auto perm = canonical_permutation(w);
  Word out;
  for (int i = 0; i < w.size(); ++i) out = out.append(perm[static_cast<std::size_t>(w[i])]);
  return out;
}

std::array<int, 4> canonical_permutation(const Word& w) {
  std::array<int, 4> perm = {0, 0, 0, 0};
  int next = 1;
  for (int i = 0; i < w.size() && next <= 3; ++i) {
    if (perm[static_cast<std::size_t>(w[i])] == 0) perm[static_cast<std::size_t>(w[i])] = next++;
  }
  for (int s = 1; s <= 3; ++s) {
    if (perm[static_cast<std::size_t>(s)] == 0) perm[static_cast<std::size_t>(s)] = next++;
  }
  return perm;
}

int leading_run(const Word& w) {
  int k = 1;
  while (k < w.size() && w[k] == w[0]) ++k;
  return w.empty() ? 0 : k;
}

Word star_word(int m) { return Word::constant(2, m).prepend(1); }

std::vector<Word> enumerate_V(int m) {
  if (m < 2) throw std::invalid_argument("index set requires m >= 2");
  std::vector<Word> out;
  std::size_t total = 1;
  for (int i = 0; i < m; ++i) total *= 3;
  out.reserve((total - 3) / 2);
  for (int k = 1; k <= m - 1; ++k) {
    const Word head = Word::constant(1, k).append(2);
    const int tail_len = m - k;
    std::vector<int> tail(static_cast<std::size_t>(tail_len), 1);
    while (true) {
      Word w = head;
      for (int t : tail) w = w.append(t);
      out.push_back(w);
      int pos = tail_len - 1;
      while (pos >= 0 && tail[static_cast<std::size_t>(pos)] == 3) {
        tail[static_cast<std::size_t>(pos)] = 1;
        --pos;
      }
      if (pos < 0) break;
      ++tail[static_cast<std::size_t>(pos)];
    }
  }
  return out;
}

StateIndex successor(const Word& v, int j, int m) {
  if (j < 1 || j > 3) throw std::invalid_argument("symbol must be 1, 2 or 3");
  const int k = leading_run(v);
  if (j == 1) {
    if (k == m - 1) return StateIndex::number_state(m);
    // (1^{k+1}, 2, v_{k+2}, ..., v_m): the run grows, the tail loses its
    // last symbol.
    Word out = Word::constant(1, k + 1).append(2);
    for (int i = k + 1; i < m; ++i) out = out.append(v[i]);
    return StateIndex::of(out);
  }
  return StateIndex::of(canonicalize(v.drop_last().prepend(j)));
}

StateSpace::StateSpace(int m) : m_(m) {
  words_ = enumerate_V(m);
  const Word star = star_word(m);
  star_rank_ = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] == star) {
      star_rank_ = static_cast<int>(i);
      break;
    }
  }
  // Pull star to the front, keep everything else in enumeration order.
  words_.erase(words_.begin() + star_rank_);
  words_.insert(words_.begin(), star);

  successors_.resize(words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    for (int j = 1; j <= 3; ++j) {
      const StateIndex s = successor(words_[i], j, m_);
      successors_[i][static_cast<std::size_t>(j - 1)] =
          s.is_word() ? index_of(s.word) : m_state();
    }
  }
}

int StateSpace::natural_rank(const Word& w) const {
  // Perfect hash on (k, tail): blocks of size 3^{m-k} by run length, then
  // the big-endian base-3 rank of the tail.
  const int k = leading_run(w);
  int offset = 0;
  for (int kk = 1; kk < k; ++kk) {
    int block = 1;
    for (int t = 0; t < m_ - kk; ++t) block *= 3;
    offset += block;
  }
  int rank = 0;
  for (int i = k + 1; i <= m_; ++i) rank = rank * 3 + (w[i] - 1);
  return offset + rank;
}

int StateSpace::index_of(const Word& w) const {
  const int r = natural_rank(w);
  if (r == star_rank_) return 0;
  return r < star_rank_ ? r + 1 : r;
}

std::string PartitionTag::str() const {
  switch (kind) {
    case Kind::WordClass: return "v:" + word.str();
    case Kind::RunClass: return "k:" + std::to_string(k);
    default: return "const";
  }
}

PartitionTag classify(const Word& w, int m) {
  if (w.size() <= m) throw std::invalid_argument("classify requires word length > m");
  const int k = leading_run(w);
  if (k == w.size()) return PartitionTag::constant_words();
  if (k >= m) return PartitionTag::run_class(k);
  return PartitionTag::word_class(canonicalize(w.prefix(m + 1)));
}

std::uint64_t class_count(int n, int m) {
  if (n <= m) throw std::invalid_argument("class_count requires n > m");
  if (n - m > 39) throw std::overflow_error("class_count overflows 64 bits");
  std::uint64_t p = 1;
  for (int i = 0; i < n - m; ++i) p *= 3u;
  return 2u * p;
}

}  // namespace rauzy
