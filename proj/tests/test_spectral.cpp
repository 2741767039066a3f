#include <doctest.h>

#include <Eigen/Dense>

#include <cmath>

#include "fanspec/errors.hpp"
#include "fanspec/families.hpp"
#include "fanspec/spectral.hpp"
#include "support.hpp"

using namespace fanspec;

// Independent oracle: Eigen's dense self-adjoint solver.
static double eigen_rho(const Graph& g) {
  const int n = g.order();
  if (n == 0) return 0.0;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : g.edges()) a(e.u, e.v) = a(e.v, e.u) = 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

TEST_SUITE("spectral") {

TEST_CASE("known spectral radii") {
  CHECK(spectral_radius(complete_graph(3)).rho == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(spectral_radius(complete_bipartite(2, 3)).rho == doctest::Approx(std::sqrt(6.0)).epsilon(1e-12));
  CHECK(std::abs(spectral_radius(build_extremal(3, 33)).rho - (1 + std::sqrt(31.0))) <= 1e-9);
  CHECK(spectral_radius(empty_graph(4)).rho == 0.0);
  CHECK(spectral_radius(empty_graph(0)).rho == 0.0);
}

TEST_CASE("solver agrees with the dense oracle and meets its invariants") {
  testing::Engine rng(31);
  for (int i = 0; i < 300; ++i) {
    const int n = 2 + static_cast<int>(rng() % 30);
    const Graph g = testing::random_connected(rng, n, 0.05 + static_cast<double>(rng() % 50) / 100.0);
    const PerronData p = spectral_radius(g);
    REQUIRE(std::abs(p.rho - eigen_rho(g)) <= kCrossCheckTolerance);
    REQUIRE(p.residual <= kSolverTolerance);
    double mx = 0.0;
    for (double v : p.x) {
      REQUIRE(v > 0.0);
      mx = std::max(mx, v);
    }
    REQUIRE(mx == doctest::Approx(1.0).epsilon(1e-15));
    const double avg = 2.0 * g.size() / n;
    REQUIRE(p.rho >= avg - 1e-9);
    REQUIRE(p.rho <= g.max_degree() + 1e-9);
  }
}

TEST_CASE("bipartite graphs converge despite the symmetric spectrum") {
  for (int a = 1; a <= 6; ++a)
    for (int b = 1; b <= 6; ++b) {
      const PerronData p = spectral_radius(complete_bipartite(a, b));
      CHECK(std::abs(p.rho - std::sqrt(a * b)) <= 1e-10);
    }
  const PerronData c = spectral_radius(cycle_graph(10));
  CHECK(std::abs(c.rho - 2.0) <= 1e-10);
}

TEST_CASE("disconnected graphs: support on one maximal component") {
  const Graph g = disjoint_union(path_graph(3), complete_graph(4));
  const PerronData p = spectral_radius(g);
  CHECK(p.rho == doctest::Approx(3.0).epsilon(1e-12));
  for (int v = 0; v < 3; ++v) CHECK(p.x[static_cast<std::size_t>(v)] == 0.0);
  for (int v = 3; v < 7; ++v) CHECK(p.x[static_cast<std::size_t>(v)] > 0.0);
  // Ties: two copies of K3 -> exactly one supported, deterministically the lower.
  const PerronData q = spectral_radius(disjoint_union(complete_graph(3), complete_graph(3)));
  CHECK(q.x[0] > 0.0);
  CHECK(q.x[3] == 0.0);
}

TEST_CASE("rayleigh quotient") {
  CHECK(rayleigh_quotient(complete_graph(2), std::vector<double>{1, 1}) == doctest::Approx(1.0));
  CHECK(rayleigh_quotient(complete_graph(3), std::vector<double>{1, 1, 0}) == doctest::Approx(1.0));
  CHECK_THROWS_AS(rayleigh_quotient(complete_graph(3), std::vector<double>{0, 0, 0}), ParameterError);
  testing::Engine rng(2);
  for (int i = 0; i < 100; ++i) {
    const Graph g = testing::random_connected(rng, 9, 0.3);
    const PerronData p = spectral_radius(g);
    CHECK(rayleigh_quotient(g, p.x) == doctest::Approx(p.rho).epsilon(1e-12));
    std::vector<double> y(9);
    for (auto& v : y) v = static_cast<double>(rng() % 1000) / 1000.0 - 0.5;
    CHECK(rayleigh_quotient(g, y) <= p.rho + 1e-9);
  }
}

TEST_CASE("quotient matrices") {
  const Graph g = build_extremal(3, 33);
  VertexSet tri(13, {0, 1, 2}), rest = VertexSet::full(13);
  rest -= tri;
  const QuotientMatrix q = quotient_matrix(g, {tri, rest});
  CHECK(q.equitable);
  CHECK(q.matrix(0, 0) == 2.0);
  CHECK(q.matrix(0, 1) == 10.0);
  CHECK(q.matrix(1, 0) == 3.0);
  CHECK(q.matrix(1, 1) == 0.0);
  CHECK(std::abs(quotient_rho(q) - (1 + std::sqrt(31.0))) <= 1e-9);

  const Graph kb = complete_bipartite(2, 3);
  const QuotientMatrix qb = quotient_matrix(kb, {VertexSet(5, {0, 1}), VertexSet(5, {2, 3, 4})});
  CHECK(qb.equitable);
  CHECK(qb.matrix(0, 1) == 3.0);
  CHECK(qb.matrix(1, 0) == 2.0);
  CHECK(std::abs(quotient_rho(qb) - std::sqrt(6.0)) <= 1e-12);

  const QuotientMatrix qk = quotient_matrix(complete_graph(6), {VertexSet::full(6)});
  CHECK(quotient_rho(qk) == doctest::Approx(5.0));

  const QuotientMatrix qp = quotient_matrix(path_graph(4), {VertexSet(4, {0, 3}), VertexSet(4, {1, 2})});
  CHECK(qp.equitable);  // ends -> 1 middle; middles -> 1 end, 1 middle
  const QuotientMatrix qn = quotient_matrix(path_graph(4), {VertexSet(4, {0, 1}), VertexSet(4, {2, 3})});
  CHECK_FALSE(qn.equitable);
  CHECK_THROWS_AS(quotient_rho(qn), ContractError);

  CHECK_THROWS_AS(quotient_matrix(path_graph(4), {VertexSet(4, {0, 1})}), ParameterError);
  CHECK_THROWS_AS(quotient_matrix(path_graph(4), {VertexSet(4, {0, 1, 2}), VertexSet(4, {2, 3})}), ParameterError);
}

TEST_CASE("closed-form bound") {
  CHECK(std::abs(closed_form_bound(3, 33) - 6.5677643628) <= 1e-10);
  CHECK(std::abs(closed_form_bound(2, 11) - (1 + std::sqrt(41.0)) / 2) <= 1e-12);
  CHECK(closed_form_bound(3, 6) == doctest::Approx(3.0));
  CHECK_THROWS_AS(closed_form_bound(5, 2), ParameterError);
  for (long m = 6; m <= 1000000; m += (m < 1000 ? 1 : 997))
    REQUIRE(std::abs(closed_form_bound(3, m) - (1 + std::sqrt(static_cast<double>(m - 2)))) <= 1e-12);
}

TEST_CASE("jacobi agrees with the dense oracle") {
  testing::Engine rng(41);
  for (int i = 0; i < 30; ++i) {
    const Graph g = testing::random_graph(rng, 12, 0.4);
    const SymmetricEigen se = jacobi_eigen(adjacency_matrix(g));
    CHECK(std::abs(se.values.back() - eigen_rho(g)) <= 1e-10);
  }
}

TEST_CASE("edge deletion strictly decreases rho (500 instances)") {
  testing::Engine rng(43);
  int violations = 0;
  for (int i = 0; i < 500; ++i) {
    const Graph g = testing::random_connected(rng, 4 + static_cast<int>(rng() % 12), 0.3);
    const auto edges = g.edges();
    const Edge e = edges[rng() % edges.size()];
    const double before = spectral_radius(g).rho;
    const double after = spectral_radius(g.without_edge(e.u, e.v)).rho;
    if (!(before - after > kStrictGap)) ++violations;
  }
  CHECK(violations == 0);
}

TEST_CASE("kelmans shift toward the larger Perron entry strictly increases rho (500 instances)") {
  testing::Engine rng(47);
  int done = 0, violations = 0;
  while (done < 500) {
    const Graph g = testing::random_connected(rng, 5 + static_cast<int>(rng() % 10), 0.3);
    const PerronData p = spectral_radius(g);
    int u = static_cast<int>(rng() % static_cast<unsigned>(g.order()));
    int v = static_cast<int>(rng() % static_cast<unsigned>(g.order()));
    if (u == v) continue;
    if (p.x[static_cast<std::size_t>(u)] < p.x[static_cast<std::size_t>(v)]) std::swap(u, v);
    VertexSet cand = g.neighbors(v);
    cand -= g.neighbors(u);
    if (cand.contains(u)) cand.erase(u);
    if (cand.empty()) continue;
    VertexSet s(g.order());
    for (int w : cand.members())
      if (rng() % 2) s.insert(w);
    if (s.empty()) s.insert(cand.first());
    const double after = spectral_radius(kelmans_shift(g, u, v, s)).rho;
    if (!(after - p.rho > kStrictGap)) ++violations;
    ++done;
  }
  CHECK(violations == 0);
}

}
