#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fanspec/graph.hpp"

namespace fanspec {

/// Subgraph embedding: mapping[p] is the host vertex assigned to pattern
/// vertex p. Containment is as a (not necessarily induced) subgraph.
struct Witness {
  std::vector<int> mapping;
  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Injective and edge-preserving.
bool validate_witness(const Graph& host, const Graph& pattern, const Witness& w);

/// A simple path on t vertices; mapping lists the path in order.
std::optional<Witness> find_path(const Graph& g, int t);

/// Copy of the fan K1 ∨ P_{order-1}, numbered as fan_graph(order): path
/// first, apex last. Works per apex on the neighbourhood graph.
std::optional<Witness> find_fan(const Graph& g, int order);

/// Copy of F3 numbered as f3_graph(): a vertex whose neighbourhood graph
/// has a matching of size three.
std::optional<Witness> find_f3(const Graph& g);

/// Copy of C6 plus a triangle vertex, numbered as c6_triangle().
std::optional<Witness> find_c6_triangle(const Graph& g);

/// Backtracking containment of `pattern` in `host`.
std::optional<Witness> subgraph_contains(const Graph& host, const Graph& pattern);

inline bool is_fan_free(const Graph& g, int order) { return !find_fan(g, order); }
inline bool is_f3_free(const Graph& g) { return !find_f3(g); }
inline bool is_c6triangle_free(const Graph& g) { return !find_c6_triangle(g); }

/// A forbidden-subgraph predicate: "none", "fan:<order>", "c6d" or "f3".
class Forbidden {
 public:
  enum class Kind { none, fan, c6_triangle, f3 };

  Forbidden() = default;
  static Forbidden none() { return {}; }
  static Forbidden fan(int order);
  static Forbidden c6_triangle() { return Forbidden(Kind::c6_triangle, 0); }
  static Forbidden f3() { return Forbidden(Kind::f3, 0); }
  /// Throws ParameterError on unknown names.
  static Forbidden parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  int order() const noexcept { return order_; }
  std::string name() const;
  /// The forbidden graph itself (empty graph for `none`).
  Graph pattern() const;

  std::optional<Witness> find(const Graph& g) const;
  bool admits(const Graph& g) const { return !find(g); }
  /// Whether adding edge uv to an admitted graph g keeps it admitted.
  /// Only copies through the new edge are searched.
  bool admits_with_edge(const Graph& g, int u, int v) const;

 private:
  Forbidden(Kind k, int order) : kind_(k), order_(order) {}
  Kind kind_ = Kind::none;
  int order_ = 0;
};

}  // namespace fanspec
