#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>

namespace unavoid {

// Fixed-capacity bitset over vertex indices 0..127.
class VertexSet {
 public:
  static constexpr int kCapacity = 128;

  constexpr VertexSet() = default;
  VertexSet(std::initializer_list<int> vs) {
    for (int v : vs) insert(v);
  }

  static VertexSet single(int v) {
    VertexSet s;
    s.insert(v);
    return s;
  }

  // {0, ..., n-1}
  static VertexSet prefix(int n) {
    VertexSet s;
    if (n >= 64) {
      s.w_[0] = ~std::uint64_t{0};
      s.w_[1] = n >= 128 ? ~std::uint64_t{0} : (std::uint64_t{1} << (n - 64)) - 1;
    } else {
      s.w_[0] = n == 0 ? 0 : (std::uint64_t{1} << n) - 1;
    }
    return s;
  }

  bool contains(int v) const { return (w_[v >> 6] >> (v & 63)) & 1U; }
  void insert(int v) { w_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(int v) { w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  int size() const { return std::popcount(w_[0]) + std::popcount(w_[1]); }
  bool empty() const { return (w_[0] | w_[1]) == 0; }

  // Smallest element, or -1.
  int first() const {
    if (w_[0]) return std::countr_zero(w_[0]);
    if (w_[1]) return 64 + std::countr_zero(w_[1]);
    return -1;
  }

  // Smallest element greater than v, or -1.
  int next(int v) const {
    ++v;
    if (v >= kCapacity) return -1;
    int word = v >> 6;
    std::uint64_t rest = w_[word] & (~std::uint64_t{0} << (v & 63));
    if (rest) return (word << 6) + std::countr_zero(rest);
    if (word == 0 && w_[1]) return 64 + std::countr_zero(w_[1]);
    return -1;
  }

  VertexSet& operator&=(const VertexSet& o) {
    w_[0] &= o.w_[0];
    w_[1] &= o.w_[1];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    w_[0] |= o.w_[0];
    w_[1] |= o.w_[1];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    w_[0] &= ~o.w_[0];
    w_[1] &= ~o.w_[1];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool is_subset_of(const VertexSet& o) const { return (*this - o).empty(); }
  bool intersects(const VertexSet& o) const { return !(*this & o).empty(); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  // Orders by the highest differing element; only used for deterministic containers.
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
    if (auto c = a.w_[1] <=> b.w_[1]; c != 0) return c;
    return a.w_[0] <=> b.w_[0];
  }

  std::uint64_t word(int i) const { return w_[i]; }

  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    iterator(const VertexSet* s, int v) : s_(s), v_(v) {}
    int operator*() const { return v_; }
    iterator& operator++() {
      v_ = s_->next(v_);
      return *this;
    }
    iterator operator++(int) {
      auto t = *this;
      ++*this;
      return t;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.v_ == b.v_; }

   private:
    const VertexSet* s_ = nullptr;
    int v_ = -1;
  };

  iterator begin() const { return {this, first()}; }
  iterator end() const { return {this, -1}; }

 private:
  std::array<std::uint64_t, 2> w_{};
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept {
    std::uint64_t h = s.word(0) * 0x9E3779B97F4A7C15ULL;
    h ^= s.word(1) + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

}  // namespace unavoid
