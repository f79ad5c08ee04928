#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace coarse {

using Index = std::size_t;

/// Fixed-length dynamic bitset. All binary operations require equal lengths;
/// callers (PointSet, Entourage) check ground sets before reaching here.
class BitSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitSet() = default;
  explicit BitSet(std::size_t size, bool value = false)
      : size_(size), words_(word_count(size), value ? ~Word{0} : Word{0}) {
    trim();
  }

  static constexpr std::size_t word_count(std::size_t bits) {
    return (bits + kWordBits - 1) / kWordBits;
  }

  std::size_t size() const { return size_; }

  bool test(Index i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(Index i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(Index i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
  void assign(Index i, bool v) { v ? set(i) : reset(i); }

  void fill(bool value) {
    std::fill(words_.begin(), words_.end(), value ? ~Word{0} : Word{0});
    trim();
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool any() const {
    return std::any_of(words_.begin(), words_.end(), [](Word w) { return w != 0; });
  }
  bool none() const { return !any(); }
  bool all() const { return count() == size_; }

  BitSet& operator|=(const BitSet& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  BitSet& operator&=(const BitSet& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  /// Set difference.
  BitSet& operator-=(const BitSet& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }
  BitSet& flip() {
    for (Word& w : words_) w = ~w;
    trim();
    return *this;
  }

  friend BitSet operator|(BitSet a, const BitSet& b) { return a |= b; }
  friend BitSet operator&(BitSet a, const BitSet& b) { return a &= b; }
  friend BitSet operator-(BitSet a, const BitSet& b) { return a -= b; }
  friend BitSet operator~(BitSet a) { return a.flip(); }

  bool is_subset_of(const BitSet& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }
  bool intersects(const BitSet& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & o.words_[k]) return true;
    return false;
  }

  /// Calls `fn(i)` for every set bit in ascending order.
  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      Word w = words_[k];
      while (w) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(w));
        fn(k * kWordBits + bit);
        w &= w - 1;
      }
    }
  }

  /// Lowest set bit, or size() when empty.
  Index first() const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k]) return k * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[k]));
    return size_;
  }

  std::vector<Index> to_vector() const {
    std::vector<Index> out;
    out.reserve(count());
    for_each([&](Index i) { out.push_back(i); });
    return out;
  }

  /// Builds a set from the low `size` bits of `mask` (size <= 64).
  static BitSet from_mask(std::size_t size, Word mask) {
    BitSet b(size);
    if (!b.words_.empty()) b.words_[0] = mask;
    b.trim();
    return b;
  }
  /// Low 64 bits as an integer mask.
  Word low_word() const { return words_.empty() ? 0 : words_[0]; }

  friend bool operator==(const BitSet&, const BitSet&) = default;
  friend auto operator<=>(const BitSet& a, const BitSet& b) {
    if (a.size_ != b.size_) return a.size_ <=> b.size_;
    // Lexicographic on the ascending element lists.
    for (std::size_t k = 0; k < a.words_.size(); ++k) {
      const Word x = a.words_[k], y = b.words_[k];
      if (x == y) continue;
      const Word diff = x ^ y;
      const Word low = diff & (~diff + 1);
      const bool a_owns = (x & low) != 0;
      const BitSet& other = a_owns ? b : a;
      // The owner of the first differing element is smaller unless the other
      // list ends right there (a proper prefix sorts first).
      bool other_continues = (other.words_[k] & ~(low | (low - 1))) != 0;
      for (std::size_t j = k + 1; j < other.words_.size() && !other_continues; ++j)
        other_continues = other.words_[j] != 0;
      const bool a_less = a_owns == other_continues;
      return a_less ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  std::size_t hash() const {
    std::size_t h = std::hash<std::size_t>{}(size_);
    for (Word w : words_) h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  void trim() {
    if (size_ % kWordBits != 0 && !words_.empty())
      words_.back() &= (Word{1} << (size_ % kWordBits)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

}  // namespace coarse
