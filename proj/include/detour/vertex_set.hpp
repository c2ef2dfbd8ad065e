#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

namespace detour {

// Fixed-capacity bitset over vertex ids 0..255.
class VertexSet {
 public:
  static constexpr int kWords = 4;
  static constexpr int kCapacity = 64 * kWords;

  constexpr VertexSet() = default;

  static VertexSet range(int n) {
    VertexSet s;
    for (int w = 0; w < kWords && n > 0; ++w, n -= 64) {
      s.w_[w] = n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    }
    return s;
  }

  static VertexSet of(const std::vector<int>& vs) {
    VertexSet s;
    for (int v : vs) s.insert(v);
    return s;
  }

  static VertexSet from_mask(std::uint64_t mask) {
    VertexSet s;
    s.w_[0] = mask;
    return s;
  }

  void insert(int v) { w_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(int v) { w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool contains(int v) const { return (w_[v >> 6] >> (v & 63)) & 1U; }

  int size() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }
  bool empty() const { return (w_[0] | w_[1] | w_[2] | w_[3]) == 0; }

  int first() const {
    for (int w = 0; w < kWords; ++w)
      if (w_[w]) return 64 * w + std::countr_zero(w_[w]);
    return -1;
  }

  // Smallest member strictly greater than v, or -1.
  int next(int v) const {
    int i = v + 1;
    if (i >= kCapacity) return -1;
    int w = i >> 6;
    std::uint64_t cur = w_[w] & (~std::uint64_t{0} << (i & 63));
    while (true) {
      if (cur) return 64 * w + std::countr_zero(cur);
      if (++w == kWords) return -1;
      cur = w_[w];
    }
  }

  template <class F>
  void for_each(F&& f) const {
    for (int w = 0; w < kWords; ++w) {
      for (std::uint64_t bits = w_[w]; bits; bits &= bits - 1) f(64 * w + std::countr_zero(bits));
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  std::uint64_t word(int i) const { return w_[i]; }

  bool intersects(const VertexSet& o) const {
    for (int w = 0; w < kWords; ++w)
      if (w_[w] & o.w_[w]) return true;
    return false;
  }
  bool subset_of(const VertexSet& o) const {
    for (int w = 0; w < kWords; ++w)
      if (w_[w] & ~o.w_[w]) return false;
    return true;
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (int w = 0; w < kWords; ++w) w_[w] &= o.w_[w];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (int w = 0; w < kWords; ++w) w_[w] |= o.w_[w];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (int w = 0; w < kWords; ++w) w_[w] &= ~o.w_[w];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::array<std::uint64_t, kWords> w_{};
};

}  // namespace detour
