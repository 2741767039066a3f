#include "fanspec/proofcheck.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "fanspec/canon.hpp"
#include "fanspec/errors.hpp"
#include "fanspec/families.hpp"
#include "fanspec/freeness.hpp"

namespace fanspec {

namespace {

constexpr double kTieTolerance = 1e-12;

double ratio(const PerronData& p, int ustar, int v) {
  return std::min(1.0, p.x[static_cast<std::size_t>(v)] / p.x[static_cast<std::size_t>(ustar)]);
}

Graph k5_minus(std::initializer_list<Edge> removed) {
  GraphBuilder b(complete_graph(5));
  for (auto e : removed) b.remove_edge(e.u, e.v);
  return b.build();
}

std::pair<double, bool> ceiling_for(ComponentClass cls, int min_degree) {
  if (min_degree >= 2) {
    switch (cls) {
      case ComponentClass::k5: return {0.0, false};
      case ComponentClass::k5_minus_e: return {-1.0, false};
      case ComponentClass::k4:
      case ComponentClass::k5_minus_2e: return {-2.0, false};
      default: return {-3.0, false};
    }
  }
  switch (cls) {
    case ComponentClass::k2: return {-1.0, true};
    case ComponentClass::star:
    case ComponentClass::k1_join_k3_plus_isolated: return {-2.0, true};
    default: return {-3.0, true};
  }
}

}  // namespace

std::vector<double> perron_ratios(const PerronData& p, int ustar, const VertexSet& s) {
  std::vector<double> out;
  s.for_each([&](int v) { out.push_back(ratio(p, ustar, v)); });
  return out;
}

Decomposition decompose(const Graph& g, const PerronData& p) {
  const int n = g.order();
  if (n == 0 || !g.is_connected()) throw ContractError("decompose requires a connected graph");
  if (static_cast<int>(p.x.size()) != n) throw ContractError("Perron vector length does not match graph order");

  Decomposition d;
  const double top = *std::max_element(p.x.begin(), p.x.end());
  for (int v = 0; v < n; ++v) {
    if (p.x[static_cast<std::size_t>(v)] >= top - kTieTolerance) {
      d.ustar = v;
      break;
    }
  }
  d.a = g.neighbors(d.ustar);
  d.a0 = VertexSet(n);
  d.aplus = VertexSet(n);
  d.a.for_each([&](int u) {
    if (g.degree_in(u, d.a) == 0)
      d.a0.insert(u);
    else
      d.aplus.insert(u);
  });
  d.b = VertexSet::full(n) - d.a;
  d.b.erase(d.ustar);

  const Graph sub = g.induced(d.aplus);
  const auto members = d.aplus.members();
  for (const auto& comp : sub.components()) {
    VertexSet lifted(n);
    comp.for_each([&](int i) { lifted.insert(members[static_cast<std::size_t>(i)]); });
    d.gamma.push_back(std::move(lifted));
  }
  d.e_aplus = g.edges_within(d.aplus);
  d.e_ab = g.edges_between(d.a, d.b);
  d.e_b = g.edges_within(d.b);
  return d;
}

double eta(const Graph& h, std::span<const double> ratios) {
  if (static_cast<int>(ratios.size()) != h.order()) throw ParameterError("one ratio per vertex required");
  double total = 0.0;
  for (int u = 0; u < h.order(); ++u) {
    const double r = ratios[static_cast<std::size_t>(u)];
    if (!(r > 0.0 && r <= 1.0)) throw ParameterError("ratio " + std::to_string(r) + " outside (0, 1]");
    total += (h.degree(u) - 2) * r;
  }
  return total - h.size();
}

IdentityReport eigen_identities(const Graph& g, const PerronData& p, const Decomposition& d) {
  const auto& x = p.x;
  const double xs = x[static_cast<std::size_t>(d.ustar)];
  double sum_a = 0.0;
  d.a.for_each([&](int u) { sum_a += x[static_cast<std::size_t>(u)]; });

  double walks = d.a.count() * xs;
  d.aplus.for_each([&](int u) { walks += g.degree_in(u, d.a) * x[static_cast<std::size_t>(u)]; });
  d.b.for_each([&](int w) { walks += g.degree_in(w, d.a) * x[static_cast<std::size_t>(w)]; });

  IdentityReport r;
  r.first_residual = p.rho * xs - sum_a;
  r.second_residual = p.rho * p.rho * xs - walks;
  r.first_holds = std::abs(r.first_residual) <= kIdentityTolerance;
  r.second_holds = std::abs(r.second_residual) <= kIdentityTolerance;
  return r;
}

EdgeBoundReport eb_bound_check(const Graph& g, const PerronData& p, const Decomposition& d) {
  EdgeBoundReport r;
  const int m = g.size();
  r.e_b = d.e_b;
  r.rho_gap = p.rho * p.rho - 2.0 * p.rho - (m - 3);
  r.applicable = r.rho_gap >= -kCrossCheckTolerance;

  double a0_sum = 0.0;
  d.a0.for_each([&](int v) { a0_sum += ratio(p, d.ustar, v); });
  double weighted = 0.0;
  d.aplus.for_each([&](int u) { weighted += (g.degree_in(u, d.a) - 2) * ratio(p, d.ustar, u); });
  r.direct_bound = weighted - d.e_aplus - 2.0 * a0_sum + 3.0;

  double eta_sum = 0.0;
  for (const auto& comp : d.gamma) eta_sum += eta(g.induced(comp), perron_ratios(p, d.ustar, comp));
  r.eta_bound = eta_sum - 2.0 * a0_sum + 3.0;

  if (r.applicable) {
    r.direct_holds = r.e_b <= r.direct_bound + kCrossCheckTolerance;
    r.eta_holds = r.e_b <= r.eta_bound + kCrossCheckTolerance;
    r.at_most_three = r.e_b <= 3;
  }
  return r;
}

std::string to_string(ComponentClass c) {
  switch (c) {
    case ComponentClass::k5: return "K5";
    case ComponentClass::k5_minus_e: return "K5-e";
    case ComponentClass::k4: return "K4";
    case ComponentClass::k5_minus_2e: return "K5-2e";
    case ComponentClass::k2: return "K2";
    case ComponentClass::star: return "star";
    case ComponentClass::k1_join_k3_plus_isolated: return "K1v(K3+sK1)";
    case ComponentClass::k2_join_isolated: return "K2vsK1";
    case ComponentClass::other: return "other";
  }
  return "?";
}

ComponentClass classify_component(const Graph& h) {
  const int n = h.order();
  std::vector<std::pair<ComponentClass, Graph>> named;
  if (n == 5) {
    named.emplace_back(ComponentClass::k5, complete_graph(5));
    named.emplace_back(ComponentClass::k5_minus_e, k5_minus({{0, 1}}));
    // both ways of deleting two edges: disjoint and sharing a vertex
    named.emplace_back(ComponentClass::k5_minus_2e, k5_minus({{0, 1}, {2, 3}}));
    named.emplace_back(ComponentClass::k5_minus_2e, k5_minus({{0, 1}, {0, 2}}));
  }
  if (n == 4) named.emplace_back(ComponentClass::k4, complete_graph(4));
  if (n == 2) named.emplace_back(ComponentClass::k2, complete_graph(2));
  if (n >= 3) named.emplace_back(ComponentClass::star, star_graph(n - 1));
  if (n >= 5)
    named.emplace_back(ComponentClass::k1_join_k3_plus_isolated,
                       join(empty_graph(1), disjoint_union(complete_graph(3), empty_graph(n - 4))));
  if (n >= 3) named.emplace_back(ComponentClass::k2_join_isolated, join(complete_graph(2), empty_graph(n - 2)));

  const auto label = canonical_label(h);
  for (const auto& [cls, graph] : named)
    if (graph.size() == h.size() && canonical_label(graph) == label) return cls;
  return ComponentClass::other;
}

bool EtaReport::all_satisfied() const {
  return std::all_of(components.begin(), components.end(), [](const auto& c) { return c.satisfied; });
}

EtaReport claim_ceilings(const Graph& g, const PerronData& p, const Decomposition& d) {
  EtaReport report;
  report.applicable = !find_path(g.induced(d.a), 6).has_value();
  for (const auto& comp : d.gamma) {
    ComponentEta c;
    c.vertices = comp;
    c.component = g.induced(comp);
    c.cls = classify_component(c.component);
    c.min_degree = c.component.min_degree();
    auto ratios = perron_ratios(p, d.ustar, comp);
    c.eta = eta(c.component, ratios);
    std::tie(c.ceiling, c.strict) = ceiling_for(c.cls, c.min_degree);
    c.satisfied = c.strict ? c.eta <= c.ceiling - kStrictGap : c.eta <= c.ceiling + kCrossCheckTolerance;
    c.equality_condition_met = true;
    for (int u = 0; u < c.component.order(); ++u)
      if (c.component.degree(u) >= 3 && ratios[static_cast<std::size_t>(u)] < 1.0 - kCrossCheckTolerance)
        c.equality_condition_met = false;
    report.components.push_back(std::move(c));
  }
  return report;
}

}  // namespace fanspec
