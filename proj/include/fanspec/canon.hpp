#pragma once

#include <span>
#include <string>
#include <vector>

#include "fanspec/graph.hpp"

namespace fanspec {

struct CanonicalForm {
  /// order[i] is the vertex of the input placed at canonical position i.
  std::vector<int> order;
  /// Opaque certificate: equal iff the (coloured) inputs are isomorphic.
  /// Stable within a release only.
  std::string label;
};

/// Canonical labelling by equitable refinement plus backtracking with
/// automorphism pruning. `colors`, when given, is an isomorphism-invariant
/// vertex colouring that isomorphisms must preserve.
CanonicalForm canonical_form(const Graph& g, std::span<const int> colors = {});

std::string canonical_label(const Graph& g);

/// g relabelled so that canonical position i becomes vertex i.
Graph canonical_graph(const Graph& g);

/// Cell index of every vertex in the coarsest equitable refinement of the
/// unit partition (cells ordered invariantly, starting at 0).
std::vector<int> equitable_cells(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace fanspec
