#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>

namespace rauzy {

// A word over the symbol alphabet {1,2,3}, packed as base-3 digits in a
// single 64-bit code (symbol at position i carries weight 3^i). Packing keeps
// enumeration at depth <= 12 cache-friendly; the length cap of 40 is the
// packing limit, far above any enumerated depth.
class Word {
 public:
  static constexpr int kMaxLength = 40;

  Word() = default;

  static Word of(std::initializer_list<int> symbols) {
    Word w;
    for (int s : symbols) w = w.append(s);
    return w;
  }

  static Word constant(int symbol, int count) {
    Word w;
    for (int i = 0; i < count; ++i) w = w.append(symbol);
    return w;
  }

  int size() const { return len_; }
  bool empty() const { return len_ == 0; }
  std::uint64_t code() const { return code_; }

  int operator[](int i) const { return static_cast<int>((code_ / pow3(i)) % 3u) + 1; }

  Word append(int symbol) const {
    check_symbol(symbol);
    check_length(len_ + 1);
    return Word(code_ + static_cast<std::uint64_t>(symbol - 1) * pow3(len_), len_ + 1);
  }

  Word prepend(int symbol) const {
    check_symbol(symbol);
    check_length(len_ + 1);
    return Word(code_ * 3u + static_cast<std::uint64_t>(symbol - 1), len_ + 1);
  }

  // First `count` symbols.
  Word prefix(int count) const {
    if (count < 0 || count > len_) throw std::out_of_range("Word::prefix");
    return Word(code_ % pow3(count), count);
  }

  Word drop_last() const { return prefix(len_ - 1); }

  std::string str() const {
    std::string s;
    s.reserve(static_cast<std::size_t>(len_));
    for (int i = 0; i < len_; ++i) s.push_back(static_cast<char>('0' + (*this)[i]));
    return s;
  }

  friend bool operator==(const Word&, const Word&) = default;

  // Lexicographic by symbols, shorter-prefix first.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    const int n = a.len_ < b.len_ ? a.len_ : b.len_;
    for (int i = 0; i < n; ++i) {
      if (auto c = a[i] <=> b[i]; c != 0) return c;
    }
    return a.len_ <=> b.len_;
  }

 private:
  Word(std::uint64_t code, int len) : code_(code), len_(len) {}

  static std::uint64_t pow3(int i) {
    static const auto powers = [] {
      std::array<std::uint64_t, kMaxLength + 1> p{};
      p[0] = 1;
      for (int k = 1; k <= kMaxLength; ++k) p[k] = p[k - 1] * 3u;
      return p;
    }();
    return powers[static_cast<std::size_t>(i)];
  }

  static void check_symbol(int symbol) {
    if (symbol < 1 || symbol > 3) throw std::invalid_argument("symbol must be 1, 2 or 3");
  }

  static void check_length(int len) {
    if (len > kMaxLength) throw std::length_error("word exceeds packing capacity");
  }

  std::uint64_t code_ = 0;
  int len_ = 0;
};

}  // namespace rauzy

template <>
struct std::hash<rauzy::Word> {
  std::size_t operator()(const rauzy::Word& w) const noexcept {
    return std::hash<std::uint64_t>{}(w.code() * 41u + static_cast<std::uint64_t>(w.size()));
  }
};
