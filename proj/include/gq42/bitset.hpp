#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace gq42 {

/// Fixed-width bitset over a small universe of N elements. All set algebra
/// is word-parallel; iteration visits members in increasing order.
template <int N>
class SmallBitset {
  static_assert(N > 0 && N <= 1024);

 public:
  static constexpr int kBits = N;
  static constexpr int kWords = (N + 63) / 64;

  constexpr SmallBitset() = default;

  constexpr SmallBitset(std::initializer_list<int> members) {
    for (int m : members) set(m);
  }

  static constexpr SmallBitset single(int i) {
    SmallBitset s;
    s.set(i);
    return s;
  }

  /// The set {0, 1, ..., n-1}.
  static constexpr SmallBitset first_n(int n) {
    SmallBitset s;
    for (int i = 0; i < n; ++i) s.set(i);
    return s;
  }

  constexpr void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  constexpr void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  constexpr bool test(int i) const {
    return (w_[i >> 6] >> (i & 63)) & 1u;
  }

  constexpr int count() const {
    int c = 0;
    for (auto w : w_) c += popcount64(w);
    return c;
  }

  constexpr bool empty() const {
    for (auto w : w_) {
      if (w) return false;
    }
    return true;
  }
  constexpr bool any() const { return !empty(); }

  /// Lowest member, or N when empty.
  constexpr int first() const { return next(-1); }

  /// Lowest member greater than `after`, or N when none.
  constexpr int next(int after) const {
    int i = after + 1;
    if (i >= N) return N;
    int word = i >> 6;
    std::uint64_t w = w_[word] >> (i & 63);
    if (w) return i + ctz64(w);
    for (++word; word < kWords; ++word) {
      if (w_[word]) return word * 64 + ctz64(w_[word]);
    }
    return N;
  }

  friend constexpr SmallBitset operator&(SmallBitset a, const SmallBitset& b) {
    for (int i = 0; i < kWords; ++i) a.w_[i] &= b.w_[i];
    return a;
  }
  friend constexpr SmallBitset operator|(SmallBitset a, const SmallBitset& b) {
    for (int i = 0; i < kWords; ++i) a.w_[i] |= b.w_[i];
    return a;
  }
  friend constexpr SmallBitset operator^(SmallBitset a, const SmallBitset& b) {
    for (int i = 0; i < kWords; ++i) a.w_[i] ^= b.w_[i];
    return a;
  }
  /// Set difference.
  friend constexpr SmallBitset operator-(SmallBitset a, const SmallBitset& b) {
    for (int i = 0; i < kWords; ++i) a.w_[i] &= ~b.w_[i];
    return a;
  }

  SmallBitset& operator&=(const SmallBitset& b) { return *this = *this & b; }
  SmallBitset& operator|=(const SmallBitset& b) { return *this = *this | b; }
  SmallBitset& operator^=(const SmallBitset& b) { return *this = *this ^ b; }
  SmallBitset& operator-=(const SmallBitset& b) { return *this = *this - b; }

  constexpr bool contains(const SmallBitset& sub) const {
    for (int i = 0; i < kWords; ++i) {
      if (sub.w_[i] & ~w_[i]) return false;
    }
    return true;
  }

  constexpr bool intersects(const SmallBitset& b) const {
    for (int i = 0; i < kWords; ++i) {
      if (w_[i] & b.w_[i]) return true;
    }
    return false;
  }

  friend constexpr bool operator==(const SmallBitset& a, const SmallBitset& b) {
    return a.w_ == b.w_;
  }
  friend constexpr bool operator!=(const SmallBitset& a, const SmallBitset& b) {
    return !(a == b);
  }

  /// Orders sets by their sorted member tuples ({0,5} before {1,2}).
  /// Equivalent to: at the lowest index where membership differs, the set
  /// holding that index comes first.
  friend constexpr bool lex_less(const SmallBitset& a, const SmallBitset& b) {
    SmallBitset d = a ^ b;
    if (d.empty()) return false;
    return a.test(d.first());
  }

  std::vector<int> to_vector() const {
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(count()));
    for (int i = first(); i < N; i = next(i)) v.push_back(i);
    return v;
  }

  constexpr const std::array<std::uint64_t, kWords>& words() const { return w_; }

  struct Hash {
    std::size_t operator()(const SmallBitset& s) const {
      std::uint64_t h = 1469598103934665603ull;
      for (auto w : s.w_) {
        h ^= w;
        h *= 1099511628211ull;
      }
      return static_cast<std::size_t>(h);
    }
  };

  class iterator {
   public:
    iterator(const SmallBitset* s, int i) : s_(s), i_(i) {}
    int operator*() const { return i_; }
    iterator& operator++() {
      i_ = s_->next(i_);
      return *this;
    }
    bool operator!=(const iterator& o) const { return i_ != o.i_; }

   private:
    const SmallBitset* s_;
    int i_;
  };

  iterator begin() const { return iterator(this, first()); }
  iterator end() const { return iterator(this, N); }

 private:
  static constexpr int popcount64(std::uint64_t w) {
    return __builtin_popcountll(w);
  }
  static constexpr int ctz64(std::uint64_t w) { return __builtin_ctzll(w); }

  std::array<std::uint64_t, kWords> w_{};
};

/// Subsets of the 45 points of GQ(4,2).
using PointSet = SmallBitset<45>;
/// Subsets of the 85 points of PG(3,4).
using PgSet = SmallBitset<85>;

}  // namespace gq42
