#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fanspec/freeness.hpp"
#include "fanspec/graph.hpp"

namespace fanspec {

inline constexpr int kDefaultFeasibilityCap = 13;

struct EnumerateOptions {
  int m = 1;
  /// Defaults to 2m.
  std::optional<int> max_n;
  /// Hereditary constraint; non-admitted subtrees are pruned.
  Forbidden forbid;
  /// Arbitrary extra filter applied to the final graphs only.
  std::function<bool(const Graph&)> filter;
  int cap = kDefaultFeasibilityCap;
  bool force = false;
};

/// Visits one representative of every isomorphism class of graphs with
/// exactly m edges, no isolated vertices and at most max_n vertices that
/// pass the constraints. Order is deterministic.
///
/// Generation extends each (m-1)-edge class by one edge and keeps a child
/// only when the added edge is in the orbit of the child's canonical
/// deletion edge; siblings are deduplicated by their edge-marked label.
/// Throws CapacityError when m > cap unless `force` is set.
void enumerate_graphs(const EnumerateOptions& opts, const std::function<void(const Graph&)>& visit);

std::vector<Graph> enumerate_all(const EnumerateOptions& opts);

/// Whether `added` is (in the orbit of) the canonical deletion edge of g.
/// On success `marked_label`, if given, receives the label of g with the
/// endpoints of `added` coloured.
bool is_canonical_deletion(const Graph& g, Edge added, std::string* marked_label = nullptr);

struct RhoHistogram {
  double bin_width = 0.5;
  std::vector<long> counts;  // counts[i] covers [i*w, (i+1)*w)
};

struct ScanReport {
  int m = 0;
  std::string predicate;
  long graph_count = 0;
  double best_rho = 0.0;
  /// graph6 of the canonical form of every maximiser, sorted.
  std::vector<std::string> argmax;
  RhoHistogram histogram;
};

struct ScanOptions {
  int m = 1;
  Forbidden forbid;
  std::optional<int> max_n;
  int cap = kDefaultFeasibilityCap;
  bool force = false;
  int threads = 1;
};

/// Exact maximum spectral radius over every class enumerate_graphs yields.
/// Ties within 1e-9 of the maximum are all reported. The result does not
/// depend on `threads`.
ScanReport extremal_scan(const ScanOptions& opts);

}  // namespace fanspec
