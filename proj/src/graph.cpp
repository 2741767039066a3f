#include "fanspec/graph.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "fanspec/errors.hpp"

namespace fanspec {

namespace {

int popcount_and(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  int c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += std::popcount(a[i] & b[i]);
  return c;
}

}  // namespace

Graph::Graph(int n) {
  if (n < 0 || n > kMaxOrder)
    throw ParameterError("graph order " + std::to_string(n) + " outside [0, " +
                         std::to_string(kMaxOrder) + "]");
  n_ = n;
  words_ = words_for(n);
  bits_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(words_), 0);
}

Graph::Graph(int n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (const auto& e : edges) {
    if (!b.add_edge(e.u, e.v))
      throw ParameterError("duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
  }
  *this = b.build();
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw ParameterError("vertex " + std::to_string(v) + " out of range for order " +
                         std::to_string(n_));
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (row(u)[static_cast<std::size_t>(v >> 6)] >> (v & 63)) & 1U;
}

int Graph::degree(int v) const {
  check_vertex(v);
  int d = 0;
  for (auto w : row(v)) d += std::popcount(w);
  return d;
}

VertexSet Graph::neighbors(int v) const {
  check_vertex(v);
  return VertexSet(n_, row(v));
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u) {
    VertexSet(n_, row(u)).for_each([&](int v) {
      if (v > u) out.push_back({u, v});
    });
  }
  return out;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(static_cast<std::size_t>(n_));
  for (int v = 0; v < n_; ++v) d[static_cast<std::size_t>(v)] = degree(v);
  return d;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int best = n_;
  for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

int Graph::degree_in(int v, const VertexSet& s) const {
  check_vertex(v);
  if (s.universe() != n_) throw ParameterError("vertex set universe does not match graph order");
  return popcount_and(row(v), s.words());
}

int Graph::edges_within(const VertexSet& s) const {
  int twice = 0;
  s.for_each([&](int v) { twice += degree_in(v, s); });
  return twice / 2;
}

int Graph::edges_between(const VertexSet& r, const VertexSet& s) const {
  int total = 0;
  r.for_each([&](int v) { total += degree_in(v, s); });
  return total;
}

Graph Graph::induced(const VertexSet& s) const {
  if (s.universe() != n_) throw ParameterError("vertex set universe does not match graph order");
  auto keep = s.members();
  std::vector<int> index(static_cast<std::size_t>(n_), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
  GraphBuilder b(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    VertexSet(n_, row(keep[i])).for_each([&](int w) {
      int j = index[static_cast<std::size_t>(w)];
      if (j > static_cast<int>(i)) b.add_edge(static_cast<int>(i), j);
    });
  }
  return b.build();
}

Graph Graph::permuted(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw ParameterError("permutation length mismatch");
  std::vector<char> seen(static_cast<std::size_t>(n_), 0);
  for (int p : perm) {
    if (p < 0 || p >= n_ || seen[static_cast<std::size_t>(p)])
      throw ParameterError("not a permutation");
    seen[static_cast<std::size_t>(p)] = 1;
  }
  GraphBuilder b(n_);
  for (const auto& e : edges()) b.add_edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
  return b.build();
}

std::vector<VertexSet> Graph::components() const {
  std::vector<VertexSet> out;
  VertexSet unseen = VertexSet::full(n_);
  while (!unseen.empty()) {
    int start = unseen.first();
    VertexSet comp(n_, {start});
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next(n_);
      frontier.for_each([&](int v) { next |= VertexSet(n_, row(v)); });
      next -= comp;
      comp |= next;
      frontier = std::move(next);
    }
    unseen -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

bool Graph::is_connected() const { return n_ <= 1 || components().size() == 1; }

Graph Graph::strip_isolated() const {
  VertexSet keep(n_);
  for (int v = 0; v < n_; ++v)
    if (degree(v) > 0) keep.insert(v);
  return induced(keep);
}

Graph Graph::with_edge(int u, int v) const {
  GraphBuilder b(*this);
  if (!b.add_edge(u, v)) throw ParameterError("edge already present");
  return b.build();
}

Graph Graph::without_edge(int u, int v) const {
  GraphBuilder b(*this);
  if (!b.remove_edge(u, v)) throw ParameterError("edge not present");
  return b.build();
}

bool Graph::check_invariants() const {
  if (bits_.size() != static_cast<std::size_t>(n_) * static_cast<std::size_t>(words_)) return false;
  long half = 0;
  for (int u = 0; u < n_; ++u) {
    auto r = row(u);
    if ((r[static_cast<std::size_t>(u >> 6)] >> (u & 63)) & 1U) return false;
    for (int v = 0; v < n_; ++v) {
      bool uv = (r[static_cast<std::size_t>(v >> 6)] >> (v & 63)) & 1U;
      bool vu = (row(v)[static_cast<std::size_t>(u >> 6)] >> (u & 63)) & 1U;
      if (uv != vu) return false;
    }
    for (auto w : r) half += std::popcount(w);
    if (n_ % 64 != 0 && (r.back() >> (n_ % 64)) != 0) return false;
  }
  return half == 2L * m_;
}

GraphBuilder::GraphBuilder(int n) : g_(n) {}
GraphBuilder::GraphBuilder(const Graph& g) : g_(g) {}

void GraphBuilder::set_bit(int u, int v, bool on) {
  auto& w = g_.bits_[static_cast<std::size_t>(u) * static_cast<std::size_t>(g_.words_) +
                     static_cast<std::size_t>(v >> 6)];
  auto mask = std::uint64_t{1} << (v & 63);
  w = on ? (w | mask) : (w & ~mask);
}

bool GraphBuilder::add_edge(int u, int v) {
  g_.check_vertex(u);
  g_.check_vertex(v);
  if (u == v) throw ParameterError("self-loop at vertex " + std::to_string(u));
  if (g_.has_edge(u, v)) return false;
  set_bit(u, v, true);
  set_bit(v, u, true);
  ++g_.m_;
  return true;
}

bool GraphBuilder::remove_edge(int u, int v) {
  if (u == v || !g_.has_edge(u, v)) return false;
  set_bit(u, v, false);
  set_bit(v, u, false);
  --g_.m_;
  return true;
}

int GraphBuilder::add_vertex() {
  Graph next(g_.n_ + 1);
  GraphBuilder b(next);
  for (const auto& e : g_.edges()) b.add_edge(e.u, e.v);
  g_ = std::move(b.g_);
  return g_.n_ - 1;
}

Graph GraphBuilder::build() const {
  assert(g_.check_invariants());
  return g_;
}

Graph join(const Graph& g, const Graph& h) {
  const int a = g.order();
  GraphBuilder b(a + h.order());
  for (const auto& e : g.edges()) b.add_edge(e.u, e.v);
  for (const auto& e : h.edges()) b.add_edge(a + e.u, a + e.v);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < h.order(); ++v) b.add_edge(u, a + v);
  return b.build();
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int a = g.order();
  GraphBuilder b(a + h.order());
  for (const auto& e : g.edges()) b.add_edge(e.u, e.v);
  for (const auto& e : h.edges()) b.add_edge(a + e.u, a + e.v);
  return b.build();
}

Graph kelmans_shift(const Graph& g, int u, int v, const VertexSet& s) {
  if (u < 0 || u >= g.order()) throw MoveError("shift target out of range", u);
  if (v < 0 || v >= g.order()) throw MoveError("shift source out of range", v);
  if (u == v) throw MoveError("shift requires distinct vertices", u);
  if (s.universe() != g.order()) throw MoveError("shift set universe mismatch", v);
  if (s.contains(u)) throw MoveError("shift set contains the target vertex", u);
  GraphBuilder b(g);
  int bad = -1;
  s.for_each([&](int w) {
    if (bad >= 0) return;
    if (!g.has_edge(v, w) || g.has_edge(u, w)) {
      bad = w;
      return;
    }
    b.remove_edge(v, w);
    b.add_edge(u, w);
  });
  if (bad >= 0)
    throw MoveError("vertex " + std::to_string(bad) + " is not in N(v) \\ N(u)", bad);
  return b.build();
}

}  // namespace fanspec
