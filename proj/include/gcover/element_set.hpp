#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace gcover {

/// Fixed-universe bitset over element indices 0..universe-1, stored in 64-bit words.
///
/// Ordering compares the sets as unsigned integers (bit i has weight 2^i), which is
/// the "bitset value" used for canonical subgroup ordering.
class ElementSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : universe_(universe), words_((universe + kWordBits - 1) / kWordBits, 0) {}

  static ElementSet full(std::size_t universe) {
    ElementSet s(universe);
    for (auto& w : s.words_) w = ~Word{0};
    s.trim();
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }
  std::size_t word_count() const noexcept { return words_.size(); }
  const Word* data() const noexcept { return words_.data(); }
  Word* data() noexcept { return words_.data(); }

  bool test(std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i) noexcept { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) noexcept { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
  }
  bool all() const noexcept { return count() == universe_; }

  bool is_subset_of(const ElementSet& other) const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & ~other.words_[w]) return false;
    return true;
  }

  ElementSet& operator|=(const ElementSet& o) noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
    return *this;
  }
  ElementSet& operator&=(const ElementSet& o) noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
    return *this;
  }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }

  /// Complement within the universe.
  ElementSet complement() const {
    ElementSet c(universe_);
    for (std::size_t w = 0; w < words_.size(); ++w) c.words_[w] = ~words_[w];
    c.trim();
    return c;
  }

  /// Indices of set bits in increasing order.
  std::vector<std::size_t> elements() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits) {
        f(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  /// Lowest-indexed element not in the set, or universe() when the set is full.
  std::size_t first_missing() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word inv = ~words_[w];
      if (inv) {
        std::size_t i = w * kWordBits + static_cast<std::size_t>(std::countr_zero(inv));
        return std::min(i, universe_);
      }
    }
    return universe_;
  }

  /// Lower-case hex of the set's integer value, most significant digit first, no leading zeros.
  std::string to_hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    for (std::size_t w = words_.size(); w-- > 0;) {
      for (int nib = 15; nib >= 0; --nib) {
        unsigned d = static_cast<unsigned>((words_[w] >> (nib * 4)) & 0xF);
        if (out.empty() && d == 0) continue;
        out.push_back(kDigits[d]);
      }
    }
    return out.empty() ? "0" : out;
  }

  static ElementSet from_hex(std::size_t universe, const std::string& hex) {
    ElementSet s(universe);
    std::size_t bit = 0;
    for (auto it = hex.rbegin(); it != hex.rend(); ++it, bit += 4) {
      char c = *it;
      unsigned d = (c >= '0' && c <= '9') ? unsigned(c - '0') : unsigned(c - 'a' + 10);
      for (unsigned b = 0; b < 4; ++b)
        if ((d >> b) & 1U) s.set(bit + b);
    }
    return s;
  }

  std::size_t hash() const noexcept {
    std::size_t h = universe_;
    for (Word w : words_) h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

  friend bool operator==(const ElementSet& a, const ElementSet& b) noexcept {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  /// Numeric comparison of the bit patterns (highest word first).
  friend bool value_less(const ElementSet& a, const ElementSet& b) noexcept {
    for (std::size_t w = a.words_.size(); w-- > 0;)
      if (a.words_[w] != b.words_[w]) return a.words_[w] < b.words_[w];
    return false;
  }

 private:
  void trim() noexcept {
    if (universe_ % kWordBits && !words_.empty()) words_.back() &= (Word{1} << (universe_ % kWordBits)) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

}  // namespace gcover
