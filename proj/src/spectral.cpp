#include "fanspec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fanspec/canon.hpp"
#include "fanspec/errors.hpp"

namespace fanspec {

namespace {

constexpr long kIterationCap = 1'000'000;
constexpr double kEstimateDelta = 1e-13;  // relative to max(1, rho)
constexpr int kFallbackMaxOrder = 64;

using AdjList = std::vector<std::vector<int>>;

AdjList adjacency_lists(const Graph& g) {
  AdjList adj(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) adj[static_cast<std::size_t>(v)] = g.neighbors(v).members();
  return adj;
}

void multiply(const AdjList& adj, const std::vector<double>& x, std::vector<double>& y) {
  for (std::size_t v = 0; v < adj.size(); ++v) {
    long double s = 0.0L;  // wide accumulator keeps high-degree rows below the residual tolerance
    for (int w : adj[v]) s += x[static_cast<std::size_t>(w)];
    y[v] = static_cast<double>(s);
  }
}

double max_abs_residual(const std::vector<double>& ax, const std::vector<double>& x, double rho) {
  double r = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    r = std::max(r, static_cast<double>(std::abs(static_cast<long double>(ax[i]) - static_cast<long double>(rho) * x[i])));
  return r;
}

PerronData jacobi_perron(const Graph& g) {
  auto eig = jacobi_eigen(adjacency_matrix(g));
  const int n = g.order();
  const int top = n - 1;
  PerronData out;
  out.rho = eig.values[static_cast<std::size_t>(top)];
  out.x.resize(static_cast<std::size_t>(n));
  double peak = 0.0;
  for (int i = 0; i < n; ++i) {
    out.x[static_cast<std::size_t>(i)] = std::abs(eig.vectors(i, top));
    peak = std::max(peak, out.x[static_cast<std::size_t>(i)]);
  }
  for (auto& v : out.x) v /= peak;
  out.residual = eigen_residual(g, out.x, out.rho);
  out.used_fallback = true;
  return out;
}

// Perron data of a connected graph.
PerronData connected_perron(const Graph& g) {
  const int n = g.order();
  PerronData out;
  if (n == 1) {
    out.x = {1.0};
    return out;
  }
  const auto adj = adjacency_lists(g);
  std::vector<double> x(static_cast<std::size_t>(n), 1.0);
  std::vector<double> y(static_cast<std::size_t>(n));
  double prev = -1.0;
  for (long it = 1; it <= kIterationCap; ++it) {
    multiply(adj, x, y);
    long double xy = 0.0L, xx = 0.0L;
    for (int i = 0; i < n; ++i) {
      const long double xi = x[static_cast<std::size_t>(i)];
      xy += xi * y[static_cast<std::size_t>(i)];
      xx += xi * xi;
    }
    const double rho = static_cast<double>(xy / xx);
    const double res = max_abs_residual(y, x, rho);
    if (res <= kSolverTolerance && std::abs(rho - prev) < kEstimateDelta * std::max(1.0, rho)) {
      out.rho = rho;
      out.x = x;
      out.residual = res;
      out.iterations = it;
      return out;
    }
    prev = rho;
    double peak = 0.0;
    for (int i = 0; i < n; ++i) {
      y[static_cast<std::size_t>(i)] += x[static_cast<std::size_t>(i)];
      peak = std::max(peak, y[static_cast<std::size_t>(i)]);
    }
    for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = y[static_cast<std::size_t>(i)] / peak;
  }
  if (n <= kFallbackMaxOrder) {
    auto fb = jacobi_perron(g);
    fb.iterations = kIterationCap;
    return fb;
  }
  multiply(adj, x, y);
  out.x = x;
  out.rho = rayleigh_quotient(g, x);
  out.residual = max_abs_residual(y, x, out.rho);
  out.iterations = kIterationCap;
  return out;
}

}  // namespace

SymmetricEigen jacobi_eigen(DenseMatrix m, double tol, int max_sweeps) {
  const int n = m.dim;
  DenseMatrix v(n);
  for (int i = 0; i < n; ++i) v(i, i) = 1.0;
  double norm = 0.0;
  for (double e : m.a) norm += e * e;
  norm = std::sqrt(norm);
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += m(p, q) * m(p, q);
    if (std::sqrt(off) <= tol * std::max(norm, 1.0)) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = m(p, q);
        if (apq == 0.0) continue;
        const double theta = (m(q, q) - m(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double mkp = m(k, p), mkq = m(k, q);
          m(k, p) = c * mkp - s * mkq;
          m(k, q) = s * mkp + c * mkq;
        }
        for (int k = 0; k < n; ++k) {
          const double mpk = m(p, k), mqk = m(q, k);
          m(p, k) = c * mpk - s * mqk;
          m(q, k) = s * mpk + c * mqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  std::vector<int> idx(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return m(a, a) < m(b, b); });
  SymmetricEigen out{{}, DenseMatrix(n)};
  for (int j = 0; j < n; ++j) {
    out.values.push_back(m(idx[static_cast<std::size_t>(j)], idx[static_cast<std::size_t>(j)]));
    for (int i = 0; i < n; ++i) out.vectors(i, j) = v(i, idx[static_cast<std::size_t>(j)]);
  }
  return out;
}

DenseMatrix adjacency_matrix(const Graph& g) {
  DenseMatrix a(g.order());
  for (const auto& e : g.edges()) {
    a(e.u, e.v) = 1.0;
    a(e.v, e.u) = 1.0;
  }
  return a;
}

PerronData spectral_radius(const Graph& g) {
  const int n = g.order();
  PerronData out;
  if (n == 0) return out;
  if (g.is_connected()) return connected_perron(g);

  struct Part {
    VertexSet cells;
    PerronData data;
  };
  std::vector<Part> parts;
  for (auto& comp : g.components()) {
    auto sub = g.induced(comp);
    parts.push_back({std::move(comp), connected_perron(sub)});
  }
  double best = 0.0;
  for (const auto& p : parts) best = std::max(best, p.data.rho);
  std::vector<std::size_t> tied;
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (parts[i].data.rho >= best - kStrictGap) tied.push_back(i);
  std::size_t pick = tied.front();
  if (tied.size() > 1) {
    std::string best_label;
    for (std::size_t i : tied) {
      auto label = canonical_label(g.induced(parts[i].cells));
      // components are ordered by lowest vertex, so strict < keeps the lowest on equal labels
      if (best_label.empty() || label < best_label) {
        best_label = std::move(label);
        pick = i;
      }
    }
  }
  const auto& chosen = parts[pick];
  out.rho = chosen.data.rho;
  out.iterations = chosen.data.iterations;
  out.used_fallback = chosen.data.used_fallback;
  out.x.assign(static_cast<std::size_t>(n), 0.0);
  std::size_t k = 0;
  chosen.cells.for_each([&](int v) { out.x[static_cast<std::size_t>(v)] = chosen.data.x[k++]; });
  out.residual = eigen_residual(g, out.x, out.rho);
  return out;
}

double rayleigh_quotient(const Graph& g, std::span<const double> y) {
  if (static_cast<int>(y.size()) != g.order()) throw ParameterError("vector length does not match graph order");
  double yy = 0.0;
  for (double v : y) yy += v * v;
  if (yy == 0.0) throw ParameterError("Rayleigh quotient of the zero vector");
  double yay = 0.0;
  for (const auto& e : g.edges()) yay += 2.0 * y[static_cast<std::size_t>(e.u)] * y[static_cast<std::size_t>(e.v)];
  return yay / yy;
}

double eigen_residual(const Graph& g, std::span<const double> y, double rho) {
  if (static_cast<int>(y.size()) != g.order()) throw ParameterError("vector length does not match graph order");
  double r = 0.0;
  for (int v = 0; v < g.order(); ++v) {
    double s = 0.0;
    g.neighbors(v).for_each([&](int w) { s += y[static_cast<std::size_t>(w)]; });
    r = std::max(r, std::abs(s - rho * y[static_cast<std::size_t>(v)]));
  }
  return r;
}

QuotientMatrix quotient_matrix(const Graph& g, const std::vector<VertexSet>& partition) {
  const int n = g.order();
  VertexSet covered(n);
  for (const auto& cell : partition) {
    if (cell.universe() != n) throw ParameterError("partition cell universe does not match graph order");
    if (cell.empty()) throw ParameterError("partition has an empty cell");
    if (cell.intersects(covered)) throw ParameterError("partition cells overlap");
    covered |= cell;
  }
  if (covered.count() != n) throw ParameterError("partition does not cover every vertex");

  const int k = static_cast<int>(partition.size());
  QuotientMatrix q{partition, DenseMatrix(k), true};
  for (int i = 0; i < k; ++i) {
    const auto& ci = partition[static_cast<std::size_t>(i)];
    for (int j = 0; j < k; ++j) {
      const auto& cj = partition[static_cast<std::size_t>(j)];
      int first = -1;
      long total = 0;
      ci.for_each([&](int v) {
        int d = g.degree_in(v, cj);
        if (first < 0) first = d;
        if (d != first) q.equitable = false;
        total += d;
      });
      q.matrix(i, j) = static_cast<double>(total) / ci.count();
    }
  }
  return q;
}

double quotient_rho(const QuotientMatrix& q) {
  if (!q.equitable) throw ContractError("quotient_rho requires an equitable partition");
  const int k = q.matrix.dim;
  if (k == 0) return 0.0;
  DenseMatrix sym(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const double ratio = static_cast<double>(q.partition[static_cast<std::size_t>(i)].count()) /
                           q.partition[static_cast<std::size_t>(j)].count();
      sym(i, j) = q.matrix(i, j) * std::sqrt(ratio);
    }
  // symmetrise exactly; the two triangles agree up to rounding
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) sym(i, j) = sym(j, i) = 0.5 * (sym(i, j) + sym(j, i));
  return jacobi_eigen(sym).values.back();
}

double closed_form_bound(int k, long m) {
  const double disc = 4.0 * static_cast<double>(m) - static_cast<double>(k) * k + 1.0;
  if (disc < 0)
    throw ParameterError("negative discriminant 4m - k^2 + 1 for k=" + std::to_string(k) + ", m=" + std::to_string(m));
  return (k - 1 + std::sqrt(disc)) / 2.0;
}

}  // namespace fanspec
