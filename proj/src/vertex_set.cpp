#include "fanspec/vertex_set.hpp"

#include <algorithm>

#include "fanspec/errors.hpp"

namespace fanspec {

VertexSet::VertexSet(int n, std::initializer_list<int> members) : VertexSet(n) {
  for (int v : members) insert(v);
}

VertexSet::VertexSet(int n, std::span<const std::uint64_t> words) : VertexSet(n) {
  std::copy_n(words.begin(), std::min(words.size(), words_.size()), words_.begin());
  if (n_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
}

VertexSet VertexSet::full(int n) {
  VertexSet s(n);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (n % 64 != 0 && !s.words_.empty()) s.words_.back() = (std::uint64_t{1} << (n % 64)) - 1;
  return s;
}

void VertexSet::insert(int v) {
  if (v < 0 || v >= n_) throw ParameterError("vertex " + std::to_string(v) + " out of range");
  words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(int v) {
  if (v < 0 || v >= n_) throw ParameterError("vertex " + std::to_string(v) + " out of range");
  words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

int VertexSet::count() const noexcept {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

bool VertexSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

int VertexSet::first() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w]) return static_cast<int>(w * 64 + std::countr_zero(words_[w]));
  return -1;
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(count()));
  for_each([&](int v) { out.push_back(v); });
  return out;
}

static void check_same_universe(const VertexSet& a, const VertexSet& b) {
  if (a.universe() != b.universe()) throw ParameterError("vertex sets over different universes");
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  check_same_universe(*this, o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  check_same_universe(*this, o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
  check_same_universe(*this, o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

bool VertexSet::is_subset_of(const VertexSet& o) const noexcept {
  if (n_ != o.n_) return false;
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

bool VertexSet::intersects(const VertexSet& o) const noexcept {
  for (std::size_t i = 0; i < std::min(words_.size(), o.words_.size()); ++i)
    if (words_[i] & o.words_[i]) return true;
  return false;
}

}  // namespace fanspec
