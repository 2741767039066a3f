#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "fanspec/vertex_set.hpp"

namespace fanspec {

struct Edge {
  int u = 0;
  int v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Upper bound on the order of any graph handled by the library.
inline constexpr int kMaxOrder = 4096;

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
///
/// Graphs are immutable values. Use GraphBuilder (or the `with_*` helpers)
/// to derive new graphs.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(int n);
  /// Throws ParameterError on loops, duplicate edges or out-of-range endpoints.
  Graph(int n, std::span<const Edge> edges);

  int order() const noexcept { return n_; }
  int size() const noexcept { return m_; }

  bool has_edge(int u, int v) const;
  int degree(int v) const;
  VertexSet neighbors(int v) const;
  /// Raw neighbor bits of v; no bounds check.
  std::span<const std::uint64_t> row(int v) const noexcept {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
  }
  int words_per_row() const noexcept { return words_; }

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  std::vector<int> degrees() const;
  int max_degree() const;
  int min_degree() const;

  /// Number of neighbors of v inside s.
  int degree_in(int v, const VertexSet& s) const;
  /// Number of edges with both ends in s.
  int edges_within(const VertexSet& s) const;
  /// Number of edges with one end in r and the other in s (r, s disjoint).
  int edges_between(const VertexSet& r, const VertexSet& s) const;

  /// Subgraph induced by s; members keep their relative order.
  Graph induced(const VertexSet& s) const;
  /// Relabelled copy: vertex v of *this becomes perm[v].
  Graph permuted(std::span<const int> perm) const;
  /// Connected components as vertex sets, ordered by lowest member.
  std::vector<VertexSet> components() const;
  bool is_connected() const;
  /// Removes degree-0 vertices and renumbers the rest in order.
  Graph strip_isolated() const;

  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;

  /// Asserts symmetry, loop-freeness and the cached size. Debug builds call
  /// this after every construction.
  bool check_invariants() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  friend class GraphBuilder;
  void check_vertex(int v) const;

  int n_ = 0;
  int m_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Mutable staging area for constructing a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);
  explicit GraphBuilder(const Graph& g);

  int order() const noexcept { return g_.n_; }
  int size() const noexcept { return g_.m_; }
  bool has_edge(int u, int v) const { return g_.has_edge(u, v); }
  /// Adds uv; returns false if already present. Throws on loops.
  bool add_edge(int u, int v);
  bool remove_edge(int u, int v);
  /// Appends an isolated vertex and returns its index.
  int add_vertex();
  const Graph& view() const noexcept { return g_; }
  Graph build() const;

 private:
  void set_bit(int u, int v, bool on);
  Graph g_;
};

/// G ∨ H: g's vertices first, then h's, plus every edge between the two.
Graph join(const Graph& g, const Graph& h);
/// G ∪ H with g's vertices first.
Graph disjoint_union(const Graph& g, const Graph& h);

/// Kelmans-style rewiring: every edge v–w with w ∈ s is replaced by u–w.
/// Requires u != v, s ⊆ N(v) \ N(u), u ∉ s. Throws MoveError naming the
/// offending vertex otherwise.
Graph kelmans_shift(const Graph& g, int u, int v, const VertexSet& s);

}  // namespace fanspec
