#include "fanspec/families.hpp"

#include <charconv>
#include <string>

#include "fanspec/errors.hpp"

namespace fanspec {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}

}  // namespace

Graph empty_graph(int n) {
  require(n >= 0, "empty graph order must be nonnegative");
  return Graph(n);
}

Graph complete_graph(int n) {
  require(n >= 1, "complete graph needs at least one vertex");
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
  return b.build();
}

Graph path_graph(int n) {
  require(n >= 1, "path needs at least one vertex");
  GraphBuilder b(n);
  for (int v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return b.build();
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs at least three vertices");
  GraphBuilder b(n);
  for (int v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return b.build();
}

Graph complete_bipartite(int a, int b) {
  require(a >= 1 && b >= 1, "complete bipartite parts must be nonempty");
  return join(empty_graph(a), empty_graph(b));
}

Graph star_graph(int leaves) {
  require(leaves >= 1, "star needs at least one leaf");
  return join(empty_graph(leaves), empty_graph(1));
}

Graph fan_graph(int order) {
  require(order >= 2, "fan order must be at least 2, got " + std::to_string(order));
  return join(path_graph(order - 1), empty_graph(1));
}

Graph c6_triangle() {
  GraphBuilder b(cycle_graph(6));
  int extra = b.add_vertex();
  b.add_edge(0, extra);
  b.add_edge(1, extra);
  return b.build();
}

Graph f3_graph() {
  GraphBuilder b(7);
  for (int t = 0; t < 3; ++t) {
    b.add_edge(2 * t, 2 * t + 1);
    b.add_edge(2 * t, 6);
    b.add_edge(2 * t + 1, 6);
  }
  return b.build();
}

bool extremal_exists(int k, int m) {
  if (k < 1 || m < 1) return false;
  // m/k - (k-1)/2 = (2m - k(k-1)) / 2k
  long num = 2L * m - static_cast<long>(k) * (k - 1);
  return num > 0 && num % (2L * k) == 0;
}

Graph build_extremal(int k, int m) {
  require(k >= 1, "extremal join needs k >= 1");
  long num = 2L * m - static_cast<long>(k) * (k - 1);
  if (num <= 0 || num % (2L * k) != 0)
    throw ParameterError("m/k - (k-1)/2 must be a positive integer (k=" + std::to_string(k) +
                         ", m=" + std::to_string(m) + ")");
  return join(complete_graph(k), empty_graph(static_cast<int>(num / (2L * k))));
}

Graph build_family(const FamilySpec& spec) {
  const auto& p = spec.params;
  auto need = [&](std::size_t count) {
    require(p.size() == count, to_string(spec.kind) + " takes " + std::to_string(count) +
                                   " parameter(s), got " + std::to_string(p.size()));
  };
  switch (spec.kind) {
    case FamilyKind::complete: need(1); return complete_graph(p[0]);
    case FamilyKind::path: need(1); return path_graph(p[0]);
    case FamilyKind::cycle: need(1); return cycle_graph(p[0]);
    case FamilyKind::complete_bipartite: need(2); return complete_bipartite(p[0], p[1]);
    case FamilyKind::fan: need(1); return fan_graph(p[0]);
    case FamilyKind::extremal_join: need(2); return build_extremal(p[0], p[1]);
    case FamilyKind::c6_triangle: need(0); return c6_triangle();
    case FamilyKind::f3: need(0); return f3_graph();
  }
  throw ParameterError("unknown family");
}

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::complete: return "complete";
    case FamilyKind::path: return "path";
    case FamilyKind::cycle: return "cycle";
    case FamilyKind::complete_bipartite: return "complete-bipartite";
    case FamilyKind::fan: return "fan";
    case FamilyKind::extremal_join: return "extremal-join";
    case FamilyKind::c6_triangle: return "c6-triangle";
    case FamilyKind::f3: return "f3";
  }
  return "?";
}

FamilySpec parse_family(std::string_view text) {
  auto colon = text.find(':');
  auto name = text.substr(0, colon);
  FamilySpec spec;
  bool found = false;
  for (auto k : {FamilyKind::complete, FamilyKind::path, FamilyKind::cycle,
                 FamilyKind::complete_bipartite, FamilyKind::fan, FamilyKind::extremal_join,
                 FamilyKind::c6_triangle, FamilyKind::f3}) {
    if (name == to_string(k)) {
      spec.kind = k;
      found = true;
    }
  }
  if (!found) throw ParameterError("unknown family '" + std::string(name) + "'");
  if (colon == std::string_view::npos) return spec;
  auto rest = text.substr(colon + 1);
  while (!rest.empty()) {
    auto comma = rest.find(',');
    auto tok = rest.substr(0, comma);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw ParameterError("bad family parameter '" + std::string(tok) + "'");
    spec.params.push_back(value);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return spec;
}

}  // namespace fanspec
