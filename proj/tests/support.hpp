#pragma once

// Random graph sources and brute-force oracles shared by the test binaries.
// Nothing here calls into canon.cpp, so the oracles stay independent of the
// code under test.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fanspec/graph.hpp"

namespace fanspec::testing {

using Engine = std::mt19937_64;

inline Graph random_graph(Engine& rng, int n, double p) {
  GraphBuilder b(n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) b.add_edge(u, v);
  return b.build();
}

/// Random connected graph: a random spanning tree plus G(n, p) edges.
inline Graph random_connected(Engine& rng, int n, double p) {
  GraphBuilder b(n);
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    b.add_edge(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(pick(rng))]);
  }
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) b.add_edge(u, v);
  return b.build();
}

inline std::vector<int> random_permutation(Engine& rng, int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// Lexicographically smallest adjacency bit string over all n! relabelings.
inline std::string brute_canonical(const Graph& g) {
  const int n = g.order();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string s(static_cast<std::size_t>(n * (n - 1) / 2), '0');
    std::size_t k = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s[k++] = g.has_edge(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]) ? '1' : '0';
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best + "/" + std::to_string(n);
}

/// Number of connected graphs with exactly e edges, counted by brute force
/// over every edge subset of K_v (v <= e + 1) and deduplicated by
/// brute_canonical.
inline std::map<int, long> brute_connected_counts(int max_edges) {
  std::map<int, long> counts;
  for (int v = 2; v <= max_edges + 1; ++v) {
    std::vector<Edge> all;
    for (int a = 0; a < v; ++a)
      for (int b = a + 1; b < v; ++b) all.push_back({a, b});
    std::set<std::string> seen;
    const int total = static_cast<int>(all.size());
    for (int e = v - 1; e <= std::min(max_edges, total); ++e) {
      std::vector<bool> pick(static_cast<std::size_t>(total), false);
      std::fill(pick.begin(), pick.begin() + e, true);
      do {
        std::vector<Edge> es;
        for (int i = 0; i < total; ++i)
          if (pick[static_cast<std::size_t>(i)]) es.push_back(all[static_cast<std::size_t>(i)]);
        Graph g(v, es);
        if (!g.is_connected()) continue;
        if (seen.insert(brute_canonical(g)).second) ++counts[e];
      } while (std::prev_permutation(pick.begin(), pick.end()));
    }
  }
  return counts;
}

/// Isomorphism classes of graphs with m edges and no isolated vertices:
/// multisets of connected classes whose sizes sum to m.
inline long brute_class_count(int m) {
  const auto conn = brute_connected_counts(m);
  // Euler transform over edge counts: ways[s] = multisets with total s.
  std::vector<long> ways(static_cast<std::size_t>(m + 1), 0);
  ways[0] = 1;
  for (const auto& [e, c] : conn) {
    // c distinct connected types of size e, each usable any number of times.
    for (long t = 0; t < c; ++t)
      for (int s = e; s <= m; ++s) ways[static_cast<std::size_t>(s)] += ways[static_cast<std::size_t>(s - e)];
  }
  return ways[static_cast<std::size_t>(m)];
}

/// Exhaustive DFS over simple paths: is there a path on t vertices?
inline bool brute_has_path(const Graph& g, int t) {
  const int n = g.order();
  if (t <= 0) return true;
  if (t > n) return false;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  auto dfs = [&](auto&& self, int v, int len) -> bool {
    if (len == t) return true;
    for (int w = 0; w < n; ++w) {
      if (used[static_cast<std::size_t>(w)] || !g.has_edge(v, w)) continue;
      used[static_cast<std::size_t>(w)] = true;
      if (self(self, w, len + 1)) return true;
      used[static_cast<std::size_t>(w)] = false;
    }
    return false;
  };
  for (int s = 0; s < n; ++s) {
    std::fill(used.begin(), used.end(), false);
    used[static_cast<std::size_t>(s)] = true;
    if (dfs(dfs, s, 1)) return true;
  }
  return false;
}

}  // namespace fanspec::testing
