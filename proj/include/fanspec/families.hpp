#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fanspec/graph.hpp"

namespace fanspec {

// Vertex numbering used by every constructor below:
//   path / cycle      0-1-2-...-(n-1) (cycle closes n-1 back to 0)
//   fan(t+1)          path 0..t-1, apex t
//   complete_bipartite  part of size a first, then part of size b
//   c6_triangle       cycle 0..5, extra vertex 6 adjacent to 0 and 1
//   f3                triangles {0,1,6}, {2,3,6}, {4,5,6}; shared vertex 6
//   extremal_join     K_k on 0..k-1, then the independent vertices

enum class FamilyKind { complete, path, cycle, complete_bipartite, fan, extremal_join, c6_triangle, f3 };

struct FamilySpec {
  FamilyKind kind = FamilyKind::complete;
  std::vector<int> params;
};

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_bipartite(int a, int b);
Graph star_graph(int leaves);
/// H_order = K1 ∨ P_{order-1}; order >= 2.
Graph fan_graph(int order);
Graph c6_triangle();
Graph f3_graph();

/// K_k ∨ (m/k - (k-1)/2) K1. Throws ParameterError unless that count is a
/// positive integer.
Graph build_extremal(int k, int m);
/// Whether build_extremal(k, m) is defined.
bool extremal_exists(int k, int m);

Graph build_family(const FamilySpec& spec);

/// Parses "kind:p1,p2,..." e.g. "fan:7", "complete-bipartite:3,3", "f3".
FamilySpec parse_family(std::string_view text);
std::string to_string(FamilyKind kind);

}  // namespace fanspec
