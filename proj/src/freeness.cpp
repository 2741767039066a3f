#include "fanspec/freeness.hpp"

#include <algorithm>
#include <charconv>

#include "fanspec/errors.hpp"
#include "fanspec/families.hpp"

namespace fanspec {

namespace {

// Depth-first search for a simple path on t vertices inside `mask`.
class PathSearch {
 public:
  PathSearch(const Graph& g, const VertexSet& mask, int t) : g_(g), mask_(mask), t_(t) {}

  std::optional<std::vector<int>> run() {
    if (t_ < 1 || mask_.count() < t_) return std::nullopt;
    std::optional<std::vector<int>> found;
    mask_.for_each([&](int s) {
      if (found) return;
      if (t_ > 1 && g_.degree_in(s, mask_) == 0) return;
      path_.assign(1, s);
      VertexSet visited(g_.order(), {s});
      if (extend(visited)) found = path_;
    });
    return found;
  }

 private:
  bool extend(VertexSet& visited) {
    if (static_cast<int>(path_.size()) == t_) return true;
    VertexSet next = g_.neighbors(path_.back()) & mask_;
    next -= visited;
    bool done = false;
    next.for_each([&](int w) {
      if (done) return;
      // a vertex with no unvisited continuation can only end the path
      if (static_cast<int>(path_.size()) + 1 < t_) {
        VertexSet onward = g_.neighbors(w) & mask_;
        onward -= visited;
        onward.erase(w);
        if (onward.empty()) return;
      }
      path_.push_back(w);
      visited.insert(w);
      if (extend(visited)) {
        done = true;
        return;
      }
      visited.erase(w);
      path_.pop_back();
    });
    return done;
  }

  const Graph& g_;
  const VertexSet& mask_;
  int t_;
  std::vector<int> path_;
};

std::optional<Witness> fan_at(const Graph& g, int apex, int order) {
  auto path = PathSearch(g, g.neighbors(apex), order - 1).run();
  if (!path) return std::nullopt;
  Witness w{std::move(*path)};
  w.mapping.push_back(apex);
  return w;
}

// Three pairwise disjoint edges inside g[mask], lexicographically first.
bool matching_of_three(const Graph& g, const VertexSet& mask, std::vector<std::pair<int, int>>& chosen) {
  if (chosen.size() == 3) return true;
  VertexSet used(g.order());
  for (auto [a, b] : chosen) {
    used.insert(a);
    used.insert(b);
  }
  VertexSet free = mask - used;
  const int after = chosen.empty() ? -1 : chosen.back().first;
  bool done = false;
  free.for_each([&](int a) {
    if (done || a <= after) return;
    VertexSet partners = g.neighbors(a) & free;
    partners.for_each([&](int b) {
      if (done || b < a) return;
      chosen.emplace_back(a, b);
      if (matching_of_three(g, mask, chosen)) {
        done = true;
        return;
      }
      chosen.pop_back();
    });
  });
  return done;
}

std::optional<Witness> f3_at(const Graph& g, int centre) {
  auto nb = g.neighbors(centre);
  if (nb.count() < 6) return std::nullopt;
  std::vector<std::pair<int, int>> chosen;
  if (!matching_of_three(g, nb, chosen)) return std::nullopt;
  Witness w;
  for (auto [a, b] : chosen) {
    w.mapping.push_back(a);
    w.mapping.push_back(b);
  }
  w.mapping.push_back(centre);
  return w;
}

class Embedder {
 public:
  Embedder(const Graph& host, const Graph& pattern) : host_(host), pat_(pattern) {}

  std::optional<Witness> run() {
    const int k = pat_.order();
    if (k > host_.order() || pat_.size() > host_.size()) return std::nullopt;
    if (k == 0) return Witness{};
    order_pattern();
    host_deg_ = host_.degrees();
    map_.assign(static_cast<std::size_t>(k), -1);
    used_ = VertexSet(host_.order());
    if (assign(0)) return Witness{map_};
    return std::nullopt;
  }

 private:
  void order_pattern() {
    const int k = pat_.order();
    std::vector<char> placed(static_cast<std::size_t>(k), 0);
    for (int step = 0; step < k; ++step) {
      int best = -1, best_links = -1, best_deg = -1;
      for (int p = 0; p < k; ++p) {
        if (placed[static_cast<std::size_t>(p)]) continue;
        int links = 0;
        for (int q : order_)
          if (pat_.has_edge(p, q)) ++links;
        int deg = pat_.degree(p);
        if (links > best_links || (links == best_links && deg > best_deg)) {
          best = p;
          best_links = links;
          best_deg = deg;
        }
      }
      placed[static_cast<std::size_t>(best)] = 1;
      order_.push_back(best);
    }
  }

  VertexSet candidates(int p) const {
    VertexSet cand = VertexSet::full(host_.order()) - used_;
    for (int q = 0; q < pat_.order(); ++q) {
      int image = map_[static_cast<std::size_t>(q)];
      if (image >= 0 && pat_.has_edge(p, q)) cand &= host_.neighbors(image);
    }
    return cand;
  }

  bool assign(std::size_t depth) {
    if (depth == order_.size()) return true;
    const int p = order_[depth];
    const int need = pat_.degree(p);
    bool done = false;
    candidates(p).for_each([&](int h) {
      if (done || host_deg_[static_cast<std::size_t>(h)] < need) return;
      map_[static_cast<std::size_t>(p)] = h;
      used_.insert(h);
      if (forward_ok(depth) && assign(depth + 1)) {
        done = true;
        return;
      }
      used_.erase(h);
      map_[static_cast<std::size_t>(p)] = -1;
    });
    return done;
  }

  // Every unassigned pattern neighbour of the newest assignment must keep a candidate.
  bool forward_ok(std::size_t depth) const {
    const int p = order_[depth];
    for (std::size_t i = depth + 1; i < order_.size(); ++i) {
      int q = order_[i];
      if (pat_.has_edge(p, q) && candidates(q).empty()) return false;
    }
    return true;
  }

  const Graph& host_;
  const Graph& pat_;
  std::vector<int> order_;
  std::vector<int> host_deg_;
  std::vector<int> map_;
  VertexSet used_;
};

}  // namespace

bool validate_witness(const Graph& host, const Graph& pattern, const Witness& w) {
  if (static_cast<int>(w.mapping.size()) != pattern.order()) return false;
  VertexSet seen(host.order());
  for (int h : w.mapping) {
    if (h < 0 || h >= host.order() || seen.contains(h)) return false;
    seen.insert(h);
  }
  for (const auto& e : pattern.edges())
    if (!host.has_edge(w.mapping[static_cast<std::size_t>(e.u)], w.mapping[static_cast<std::size_t>(e.v)])) return false;
  return true;
}

std::optional<Witness> find_path(const Graph& g, int t) {
  if (t < 1) throw ParameterError("path length must be at least 1");
  auto path = PathSearch(g, VertexSet::full(g.order()), t).run();
  if (!path) return std::nullopt;
  return Witness{std::move(*path)};
}

std::optional<Witness> find_fan(const Graph& g, int order) {
  if (order < 3) throw ParameterError("fan order must be at least 3");
  for (int a = 0; a < g.order(); ++a) {
    if (g.degree(a) < order - 1) continue;
    if (auto w = fan_at(g, a, order)) return w;
  }
  return std::nullopt;
}

std::optional<Witness> find_f3(const Graph& g) {
  for (int c = 0; c < g.order(); ++c)
    if (auto w = f3_at(g, c)) return w;
  return std::nullopt;
}

std::optional<Witness> find_c6_triangle(const Graph& g) {
  static const Graph pattern = c6_triangle();
  return subgraph_contains(g, pattern);
}

std::optional<Witness> subgraph_contains(const Graph& host, const Graph& pattern) {
  return Embedder(host, pattern).run();
}

Forbidden Forbidden::fan(int order) {
  if (order < 3) throw ParameterError("fan order must be at least 3");
  return Forbidden(Kind::fan, order);
}

Forbidden Forbidden::parse(std::string_view text) {
  if (text == "none" || text.empty()) return none();
  if (text == "c6d") return c6_triangle();
  if (text == "f3") return f3();
  if (text.starts_with("fan:")) {
    auto num = text.substr(4);
    int order = 0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), order);
    if (ec == std::errc() && ptr == num.data() + num.size()) return fan(order);
  }
  throw ParameterError("unknown forbidden graph '" + std::string(text) + "' (expected fan:<order>, c6d, f3 or none)");
}

std::string Forbidden::name() const {
  switch (kind_) {
    case Kind::none: return "none";
    case Kind::fan: return "fan:" + std::to_string(order_);
    case Kind::c6_triangle: return "c6d";
    case Kind::f3: return "f3";
  }
  return "?";
}

Graph Forbidden::pattern() const {
  switch (kind_) {
    case Kind::none: return Graph(0);
    case Kind::fan: return fan_graph(order_);
    case Kind::c6_triangle: return fanspec::c6_triangle();
    case Kind::f3: return f3_graph();
  }
  return Graph(0);
}

std::optional<Witness> Forbidden::find(const Graph& g) const {
  switch (kind_) {
    case Kind::none: return std::nullopt;
    case Kind::fan: return find_fan(g, order_);
    case Kind::c6_triangle: return find_c6_triangle(g);
    case Kind::f3: return find_f3(g);
  }
  return std::nullopt;
}

bool Forbidden::admits_with_edge(const Graph& g, int u, int v) const {
  if (kind_ == Kind::none) return true;
  const Graph h = g.with_edge(u, v);
  if (kind_ == Kind::c6_triangle) return !find_c6_triangle(h);
  // A new copy must have its apex/centre at u, v or a common neighbour.
  VertexSet centres = h.neighbors(u) & h.neighbors(v);
  centres.insert(u);
  centres.insert(v);
  bool hit = false;
  centres.for_each([&](int c) {
    if (hit) return;
    hit = kind_ == Kind::fan ? (h.degree(c) >= order_ - 1 && fan_at(h, c, order_).has_value())
                             : f3_at(h, c).has_value();
  });
  return !hit;
}

}  // namespace fanspec
