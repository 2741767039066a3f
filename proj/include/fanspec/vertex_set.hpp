#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace fanspec {

inline constexpr int words_for(int n) { return (n + 63) / 64; }

/// Bitset over the vertices 0..n-1 of a graph.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int n) : n_(n), words_(static_cast<std::size_t>(words_for(n)), 0) {}
  VertexSet(int n, std::initializer_list<int> members);
  VertexSet(int n, std::span<const std::uint64_t> words);

  static VertexSet full(int n);

  int universe() const noexcept { return n_; }
  bool contains(int v) const noexcept {
    return v >= 0 && v < n_ && ((words_[v >> 6] >> (v & 63)) & 1U);
  }
  void insert(int v);
  void erase(int v);
  int count() const noexcept;
  bool empty() const noexcept;
  /// Lowest member, or -1.
  int first() const noexcept;

  std::vector<int> members() const;
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        f(static_cast<int>(w * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  bool is_subset_of(const VertexSet& o) const noexcept;
  bool intersects(const VertexSet& o) const noexcept;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace fanspec
