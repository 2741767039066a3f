#include "fanspec/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <set>
#include <thread>
#include <tuple>

#include "fanspec/canon.hpp"
#include "fanspec/errors.hpp"
#include "fanspec/graph6.hpp"
#include "fanspec/spectral.hpp"

namespace fanspec {

namespace {

constexpr double kArgmaxTolerance = 1e-9;

std::string marked_label(const Graph& g, Edge e) {
  std::vector<int> colors(static_cast<std::size_t>(g.order()), 0);
  colors[static_cast<std::size_t>(e.u)] = 1;
  colors[static_cast<std::size_t>(e.v)] = 1;
  return canonical_form(g, colors).label;
}

Graph padded(const Graph& g, int extra) {
  if (extra == 0) return g;
  GraphBuilder b(g.order() + extra);
  for (const auto& e : g.edges()) b.add_edge(e.u, e.v);
  return b.build();
}

class Generator {
 public:
  explicit Generator(const EnumerateOptions& opts)
      : opts_(opts), max_n_(opts.max_n.value_or(2 * opts.m)) {}

  // Accepted one-edge extensions of `parent`, in deterministic order.
  std::vector<Graph> children(const Graph& parent) const {
    std::vector<Graph> out;
    std::set<std::string> seen;
    const int n = parent.order();
    auto consider = [&](int extra, int u, int v) {
      if (n + extra > max_n_) return;
      Graph base = padded(parent, extra);
      if (!opts_.forbid.admits_with_edge(base, u, v)) return;
      Graph child = base.with_edge(u, v);
      std::string label;
      if (!is_canonical_deletion(child, {u, v}, &label)) return;
      if (!seen.insert(std::move(label)).second) return;
      out.push_back(std::move(child));
    };
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (!parent.has_edge(u, v)) consider(0, u, v);
    for (int u = 0; u < n; ++u) consider(1, u, n);
    consider(2, n, n + 1);
    return out;
  }

  template <typename Visit>
  void dfs(const Graph& g, Visit&& visit) const {
    if (g.size() == opts_.m) {
      if (!opts_.filter || opts_.filter(g)) visit(g);
      return;
    }
    for (const auto& c : children(g)) dfs(c, visit);
  }

  // Nodes at depth `level` (edge count), in DFS order.
  void collect(const Graph& g, int level, std::vector<Graph>& out) const {
    if (g.size() == level) {
      out.push_back(g);
      return;
    }
    for (const auto& c : children(g)) collect(c, level, out);
  }

  Graph root() const { return Graph(2, std::vector<Edge>{{0, 1}}); }
  bool root_admitted() const { return max_n_ >= 2 && opts_.forbid.admits(root()); }

 private:
  const EnumerateOptions& opts_;
  int max_n_;
};

void check_capacity(int m, int cap, bool force) {
  if (m < 1) throw ParameterError("m must be at least 1");
  if (m > cap && !force)
    throw CapacityError("m=" + std::to_string(m) + " exceeds the feasibility cap of " + std::to_string(cap) +
                        " (override with force)");
}

struct EdgeKey {
  int low, high, common;
  friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
};

}  // namespace

bool is_canonical_deletion(const Graph& g, Edge added, std::string* label_out) {
  const auto cells = equitable_cells(g);
  auto key = [&](const Edge& e) {
    int a = cells[static_cast<std::size_t>(e.u)], b = cells[static_cast<std::size_t>(e.v)];
    int common = (g.neighbors(e.u) & g.neighbors(e.v)).count();
    return EdgeKey{std::min(a, b), std::max(a, b), common};
  };
  const auto edges = g.edges();
  const EdgeKey mine = key(added);
  std::vector<Edge> tied;
  for (const auto& e : edges) {
    EdgeKey k = key(e);
    if (k < mine) return false;
    if (k == mine) tied.push_back(e);
  }
  std::string own = marked_label(g, added);
  const Edge norm{std::min(added.u, added.v), std::max(added.u, added.v)};
  for (const auto& e : tied) {
    if (e == norm) continue;
    if (marked_label(g, e) < own) return false;
  }
  if (label_out) *label_out = std::move(own);
  return true;
}

void enumerate_graphs(const EnumerateOptions& opts, const std::function<void(const Graph&)>& visit) {
  check_capacity(opts.m, opts.cap, opts.force);
  Generator gen(opts);
  if (!gen.root_admitted()) return;
  gen.dfs(gen.root(), visit);
}

std::vector<Graph> enumerate_all(const EnumerateOptions& opts) {
  std::vector<Graph> out;
  enumerate_graphs(opts, [&](const Graph& g) { out.push_back(g); });
  return out;
}

namespace {

struct Partial {
  long count = 0;
  double best = -1.0;
  std::vector<std::pair<double, Graph>> near_best;
  std::vector<long> bins;

  void add(const Graph& g, double rho, double width) {
    ++count;
    // Integral radii sit exactly on bin edges; snap them up so solver noise can't move them.
    auto bin = static_cast<std::size_t>(std::floor(rho / width + 1e-9));
    if (bins.size() <= bin) bins.resize(bin + 1, 0);
    ++bins[bin];
    if (rho > best) best = rho;
    if (rho >= best - kArgmaxTolerance) {
      near_best.emplace_back(rho, g);
      std::erase_if(near_best, [&](const auto& p) { return p.first < best - kArgmaxTolerance; });
    }
  }
};

}  // namespace

ScanReport extremal_scan(const ScanOptions& opts) {
  check_capacity(opts.m, opts.cap, opts.force);
  EnumerateOptions eo;
  eo.m = opts.m;
  eo.max_n = opts.max_n;
  eo.forbid = opts.forbid;
  eo.cap = opts.cap;
  eo.force = opts.force;

  ScanReport report;
  report.m = opts.m;
  report.predicate = opts.forbid.name();
  const double width = report.histogram.bin_width;

  Generator gen(eo);
  std::vector<Graph> roots;
  if (gen.root_admitted()) gen.collect(gen.root(), std::min(opts.m, 5), roots);

  std::vector<Partial> parts(roots.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < roots.size(); i = next++) {
      gen.dfs(roots[i], [&](const Graph& g) { parts[i].add(g, spectral_radius(g).rho, width); });
    }
  };
  const int threads = std::max(1, opts.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  Partial total;
  for (auto& p : parts) {
    total.count += p.count;
    total.best = std::max(total.best, p.best);
    if (total.bins.size() < p.bins.size()) total.bins.resize(p.bins.size(), 0);
    for (std::size_t b = 0; b < p.bins.size(); ++b) total.bins[b] += p.bins[b];
  }
  report.graph_count = total.count;
  report.histogram.counts = total.bins;
  if (total.count == 0) return report;
  report.best_rho = total.best;
  std::set<std::string> argmax;
  for (auto& p : parts)
    for (auto& [rho, g] : p.near_best)
      if (rho >= total.best - kArgmaxTolerance) argmax.insert(graph6_encode(canonical_graph(g)));
  report.argmax.assign(argmax.begin(), argmax.end());
  return report;
}

}  // namespace fanspec
