#include "fanspec/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "fanspec/canon.hpp"
#include "fanspec/errors.hpp"
#include "fanspec/families.hpp"
#include "fanspec/graph6.hpp"
#include "fanspec/spectral.hpp"

namespace fanspec {

std::uint64_t Rng::below(std::uint64_t n) {
  // reject the top partial block so every residue is equally likely
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t r;
  do {
    r = engine_();
  } while (r >= limit);
  return r % n;
}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

void validate(const SearchConfig& cfg) {
  if (cfg.m < 1) throw ParameterError("m must be at least 1");
  if (cfg.restarts < 1) throw ParameterError("restarts must be at least 1");
  if (cfg.max_steps < 0) throw ParameterError("max_steps must be nonnegative");
  if (cfg.relocation_weight < 0 || cfg.kelmans_weight < 0)
    throw ParameterError("move weights must be nonnegative");
  if (cfg.relocation_weight == 0 && cfg.kelmans_weight == 0)
    throw ParameterError("at least one move weight must be positive");
  if (cfg.pool && *cfg.pool < 2) throw ParameterError("vertex pool must hold at least two vertices");
  if (cfg.acceptance == Acceptance::anneal && (cfg.anneal_t0 <= 0 || cfg.anneal_cooling <= 0 || cfg.anneal_cooling > 1))
    throw ParameterError("annealing needs t0 > 0 and cooling in (0, 1]");
}

std::optional<int> bound_parameter(const Forbidden& f) {
  switch (f.kind()) {
    case Forbidden::Kind::fan:
      if (f.order() >= 3) return (f.order() - 1) / 2;
      return std::nullopt;
    case Forbidden::Kind::c6_triangle:
    case Forbidden::Kind::f3: return 3;
    case Forbidden::Kind::none: return std::nullopt;
  }
  return std::nullopt;
}

namespace {

constexpr double kRelocationFloor = 0.05;

template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
}

std::vector<Edge> non_edges(const Graph& g) {
  std::vector<Edge> out;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.has_edge(u, v)) out.push_back({u, v});
  return out;
}

// Rewires s from v to u, checking admissibility edge by edge. Removing
// edges never creates a forbidden copy.
std::optional<Graph> shifted(const Graph& g, int u, int v, const std::vector<int>& s, const Forbidden& forbid) {
  GraphBuilder b(g);
  for (int w : s) b.remove_edge(v, w);
  for (int w : s) {
    if (!forbid.admits_with_edge(b.view(), u, w)) return std::nullopt;
    b.add_edge(u, w);
  }
  return b.build();
}

class Walker {
 public:
  Walker(const SearchConfig& cfg, int index)
      : cfg_(cfg), rng_(cfg.seed + static_cast<std::uint64_t>(index)), pool_(cfg.pool.value_or(cfg.m + 1)) {}

  RestartResult run() {
    RestartResult out;
    auto start = initial_graph();
    if (!start) {
      out.feasible = false;
      return out;
    }
    Graph cur = std::move(*start);
    PerronData perron = spectral_radius(cur);
    Graph best = cur;
    double best_rho = perron.rho;
    out.trace.push_back({0, best_rho});
    int plateau = 0;
    const double total_weight = cfg_.relocation_weight + cfg_.kelmans_weight;

    for (long step = 1; step <= cfg_.max_steps; ++step) {
      const bool relocate = rng_.uniform() * total_weight < cfg_.relocation_weight;
      auto cand = relocate ? propose_relocation(cur, perron) : propose_kelmans(cur, perron);
      if (!cand) continue;
      PerronData next = spectral_radius(*cand);
      const double delta = next.rho - perron.rho;
      bool accept = false;
      if (cfg_.acceptance == Acceptance::hill_climb) {
        if (delta > cfg_.plateau_tolerance) {
          accept = true;
          plateau = 0;
        } else if (std::abs(delta) <= cfg_.plateau_tolerance && plateau < cfg_.plateau_cap) {
          accept = true;
          ++plateau;
        }
      } else {
        const double temp = cfg_.anneal_t0 * std::pow(cfg_.anneal_cooling, static_cast<double>(step));
        accept = delta >= 0 || rng_.uniform() < std::exp(delta / temp);
      }
      if (!accept) continue;
      cur = std::move(*cand);
      perron = std::move(next);
      ++out.accepted;
      if (cfg_.verify_steps && (cur.size() != cfg_.m || !cfg_.forbid.admits(cur)))
        throw std::logic_error("search left the admissible space at step " + std::to_string(step));
      if (perron.rho > best_rho + cfg_.plateau_tolerance) {
        best_rho = perron.rho;
        best = cur;
        out.trace.push_back({step, best_rho});
      }
    }
    out.best_rho = best_rho;
    out.best_graph6 = graph6_encode(canonical_graph(best.strip_isolated()));
    return out;
  }

 private:
  std::optional<Graph> initial_graph() {
    GraphBuilder b(pool_);
    const long budget = 200L * cfg_.m + 1000;
    for (long tries = 0; b.size() < cfg_.m && tries < budget; ++tries) {
      int u = static_cast<int>(rng_.below(static_cast<std::uint64_t>(pool_)));
      int v = static_cast<int>(rng_.below(static_cast<std::uint64_t>(pool_)));
      if (u == v || b.has_edge(u, v)) continue;
      if (cfg_.forbid.admits_with_edge(b.view(), u, v)) b.add_edge(u, v);
    }
    while (b.size() < cfg_.m) {
      auto options = non_edges(b.view());
      shuffle(options, rng_);
      bool added = false;
      for (const auto& e : options) {
        if (cfg_.forbid.admits_with_edge(b.view(), e.u, e.v)) {
          b.add_edge(e.u, e.v);
          added = true;
          break;
        }
      }
      if (!added) return std::nullopt;
    }
    return b.build();
  }

  // Draws a vertex with probability proportional to x_v + floor.
  int perron_weighted_vertex(const PerronData& p) {
    double total = 0.0;
    for (double v : p.x) total += v + kRelocationFloor;
    double r = rng_.uniform() * total;
    for (int v = 0; v < pool_; ++v) {
      r -= p.x[static_cast<std::size_t>(v)] + kRelocationFloor;
      if (r < 0) return v;
    }
    return pool_ - 1;
  }

  // Deletes a uniform edge and adds a non-edge; half of the time the new
  // endpoints are drawn uniformly, otherwise by Perron weight.
  std::optional<Graph> propose_relocation(const Graph& g, const PerronData& p) {
    const auto edges = g.edges();
    const Edge out = edges[rng_.below(edges.size())];
    Graph removed = g.without_edge(out.u, out.v);
    const bool weighted = rng_.uniform() < 0.5;
    for (int tries = 0; tries < 100; ++tries) {
      int u = weighted ? perron_weighted_vertex(p) : static_cast<int>(rng_.below(static_cast<std::uint64_t>(pool_)));
      int v = weighted ? perron_weighted_vertex(p) : static_cast<int>(rng_.below(static_cast<std::uint64_t>(pool_)));
      if (u == v || removed.has_edge(u, v)) continue;
      if (Edge{std::min(u, v), std::max(u, v)} == out) continue;
      if (!cfg_.forbid.admits_with_edge(removed, u, v)) return std::nullopt;
      return removed.with_edge(u, v);
    }
    return std::nullopt;
  }

  std::optional<Graph> propose_kelmans(const Graph& g, const PerronData& p) {
    std::vector<int> active;
    for (int v = 0; v < g.order(); ++v)
      if (g.degree(v) > 0) active.push_back(v);
    if (active.size() < 2) return std::nullopt;
    int u = active[rng_.below(active.size())];
    int v = active[rng_.below(active.size())];
    if (u == v) return std::nullopt;
    if (p.x[static_cast<std::size_t>(u)] < p.x[static_cast<std::size_t>(v)]) std::swap(u, v);
    VertexSet s = g.neighbors(v) - g.neighbors(u);
    s.erase(u);
    auto members = s.members();
    if (members.empty()) return std::nullopt;
    if (rng_.uniform() >= 0.5) {
      std::vector<int> subset;
      for (int w : members)
        if (rng_.uniform() < 0.5) subset.push_back(w);
      if (subset.empty()) subset.push_back(members[rng_.below(members.size())]);
      members = std::move(subset);
    }
    return shifted(g, u, v, members, cfg_.forbid);
  }

  const SearchConfig& cfg_;
  Rng rng_;
  int pool_;
};

}  // namespace

SearchReport local_search(const SearchConfig& cfg) {
  validate(cfg);
  SearchReport report;
  report.m = cfg.m;
  report.predicate = cfg.forbid.name();
  report.seed = cfg.seed;
  report.restarts.resize(static_cast<std::size_t>(cfg.restarts));

  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < cfg.restarts; i = next++) report.restarts[static_cast<std::size_t>(i)] = Walker(cfg, i).run();
  };
  const int threads = std::clamp(cfg.threads, 1, cfg.restarts);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  for (int i = 0; i < cfg.restarts; ++i) {
    const auto& r = report.restarts[static_cast<std::size_t>(i)];
    if (!r.feasible) continue;
    bool better = report.best_restart < 0 || r.best_rho > report.best_rho + cfg.plateau_tolerance ||
                  (std::abs(r.best_rho - report.best_rho) <= cfg.plateau_tolerance && r.best_graph6 < report.best_graph6);
    if (better) {
      report.best_restart = i;
      report.best_rho = r.best_rho;
      report.best_graph6 = r.best_graph6;
    }
  }
  report.feasible = report.best_restart >= 0;
  if (!report.feasible) return report;

  auto k = bound_parameter(cfg.forbid);
  report.bound_comparison.k = k;
  if (k && 4L * cfg.m - static_cast<long>(*k) * *k + 1 >= 0) {
    report.bound_comparison.bound = closed_form_bound(*k, cfg.m);
    report.bound_comparison.exceeded = report.best_rho > *report.bound_comparison.bound + kViolationTolerance;
  }
  if (k && extremal_exists(*k, cfg.m)) {
    report.extremal_defined = true;
    report.iso_to_extremal = canonical_label(graph6_decode(report.best_graph6)) ==
                             canonical_label(build_extremal(*k, cfg.m));
  }
  return report;
}

LocalMaxReport is_local_max(const Graph& g, const Forbidden& forbid) {
  constexpr double kImprove = 1e-10;
  constexpr std::size_t kFullSubsetLimit = 12;
  LocalMaxReport out;
  const PerronData base = spectral_radius(g);
  out.rho = base.rho;
  auto consider = [&](const Graph& h, const char* kind, std::string desc) {
    ++out.moves_checked;
    const double rho = spectral_radius(h).rho;
    if (!out.best_move || rho > out.best_move->rho) out.best_move = MoveCertificate{kind, std::move(desc), rho};
  };

  // relocations, allowing up to two fresh endpoints
  GraphBuilder wide(g);
  wide.add_vertex();
  wide.add_vertex();
  const Graph roomy = wide.build();
  for (const auto& out_edge : g.edges()) {
    const Graph removed = roomy.without_edge(out_edge.u, out_edge.v);
    for (int u = 0; u < roomy.order(); ++u) {
      for (int v = u + 1; v < roomy.order(); ++v) {
        if (removed.has_edge(u, v) || (Edge{u, v} == out_edge)) continue;
        if (!forbid.admits_with_edge(removed, u, v)) continue;
        consider(removed.with_edge(u, v), "relocate",
                 "move " + std::to_string(out_edge.u) + "-" + std::to_string(out_edge.v) + " to " +
                     std::to_string(u) + "-" + std::to_string(v));
      }
    }
  }

  for (int u = 0; u < g.order(); ++u) {
    for (int v = 0; v < g.order(); ++v) {
      if (u == v) continue;
      VertexSet s = g.neighbors(v) - g.neighbors(u);
      s.erase(u);
      const auto members = s.members();
      if (members.empty()) continue;
      std::vector<std::vector<int>> subsets;
      if (members.size() <= kFullSubsetLimit) {
        for (std::uint32_t mask = 1; mask < (1U << members.size()); ++mask) {
          std::vector<int> sub;
          for (std::size_t i = 0; i < members.size(); ++i)
            if (mask & (1U << i)) sub.push_back(members[i]);
          subsets.push_back(std::move(sub));
        }
      } else {
        for (int w : members) subsets.push_back({w});
        subsets.push_back(members);
      }
      for (const auto& sub : subsets) {
        auto h = shifted(g, u, v, sub, forbid);
        if (!h) continue;
        std::string desc = "shift " + std::to_string(sub.size()) + " edge(s) from " + std::to_string(v) + " to " +
                           std::to_string(u);
        consider(*h, "kelmans", std::move(desc));
      }
    }
  }
  out.is_local_max = !out.best_move || out.best_move->rho <= base.rho + kImprove;
  return out;
}

}  // namespace fanspec
