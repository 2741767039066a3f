#include <doctest.h>

#include <cmath>

#include "fanspec/errors.hpp"
#include "fanspec/families.hpp"
#include "fanspec/freeness.hpp"
#include "fanspec/proofcheck.hpp"
#include "support.hpp"

using namespace fanspec;

namespace {

struct Checked {
  PerronData p;
  Decomposition d;
};

Checked run(const Graph& g) {
  PerronData p = spectral_radius(g);
  return {p, decompose(g, p)};
}

}  // namespace

TEST_SUITE("proofcheck") {

TEST_CASE("decomposition of the extremal graph") {
  const Graph g = build_extremal(3, 33);
  auto [p, d] = run(g);
  CHECK(d.ustar < 3);
  CHECK(d.a.count() == 12);
  CHECK(d.a0.empty());
  CHECK(d.b.empty());
  CHECK(d.e_aplus == 21);
  CHECK(d.e_ab == 0);
  CHECK(d.e_b == 0);
  CHECK(d.size_identity_holds(33));
  const auto ids = eigen_identities(g, p, d);
  CHECK(ids.first_holds);
  CHECK(ids.second_holds);
  CHECK(std::abs(ids.first_residual) < 1e-8);
}

TEST_CASE("decomposition of a star and of P4") {
  const Graph star = star_graph(5);
  auto [p, d] = run(star);
  CHECK(d.ustar == 5);
  CHECK(d.a0 == d.a);
  CHECK(d.a.count() == 5);
  CHECK(d.b.empty());
  CHECK(d.size_identity_holds(5));
  const auto ids = eigen_identities(star, p, d);
  CHECK(ids.second_holds);
  CHECK(p.rho * p.rho == doctest::Approx(5.0));

  const Graph p4 = path_graph(4);
  auto [q, e] = run(p4);
  CHECK(e.ustar == 1);
  CHECK(e.a.members() == std::vector<int>{0, 2});
  CHECK(e.a0.members() == std::vector<int>{0, 2});
  CHECK(e.b.members() == std::vector<int>{3});
  CHECK(e.e_ab == 1);
  CHECK(e.size_identity_holds(3));
}

TEST_CASE("disconnected input is a contract error") {
  const Graph g = disjoint_union(complete_graph(3), complete_graph(2));
  CHECK_THROWS_AS(decompose(g, spectral_radius(g)), ContractError);
}

TEST_CASE("eta values") {
  CHECK(eta(complete_graph(5), std::vector<double>(5, 1.0)) == doctest::Approx(0.0));
  CHECK(eta(complete_graph(2), std::vector<double>(2, 1.0)) == doctest::Approx(-3.0));
  CHECK(eta(complete_graph(4), std::vector<double>(4, 0.5)) == doctest::Approx(-4.0));  // 4 * (3 - 2) * 0.5 - 6
  CHECK_THROWS_AS(eta(complete_graph(2), std::vector<double>{1.0, 1.5}), ParameterError);
  CHECK_THROWS_AS(eta(complete_graph(2), std::vector<double>{1.0, 0.0}), ParameterError);
  CHECK_THROWS_AS(eta(complete_graph(2), std::vector<double>{1.0}), ParameterError);
}

TEST_CASE("eta is affine in the ratios") {
  testing::Engine rng(73);
  std::uniform_real_distribution<double> unit(0.01, 1.0);
  for (int i = 0; i < 300; ++i) {
    const Graph h = testing::random_graph(rng, 2 + static_cast<int>(rng() % 8), 0.5);
    const auto n = static_cast<std::size_t>(h.order());
    std::vector<double> r1(n), r2(n), mix(n);
    const double alpha = unit(rng);
    for (std::size_t v = 0; v < n; ++v) {
      r1[v] = unit(rng);
      r2[v] = unit(rng);
      mix[v] = alpha * r1[v] + (1 - alpha) * r2[v];
    }
    const double lhs = eta(h, mix);
    const double rhs = alpha * eta(h, r1) + (1 - alpha) * eta(h, r2) + h.size() * (alpha + (1 - alpha) - 1);
    REQUIRE(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("edge-count bound") {
  const Graph g = build_extremal(3, 33);
  auto [p, d] = run(g);
  const auto eb = eb_bound_check(g, p, d);
  CHECK(eb.applicable);
  CHECK(eb.e_b == 0);
  CHECK(eb.direct_holds);
  CHECK(eb.at_most_three);
  CHECK(eb.direct_bound == doctest::Approx(eb.eta_bound));

  const Graph p4 = path_graph(4);
  auto [q, e] = run(p4);
  CHECK_FALSE(eb_bound_check(p4, q, e).applicable);

  // K2 ∨ 5K1: rho^2 - 2rho = 10 - 2rho... decided numerically
  const Graph k2 = build_extremal(2, 11);
  auto [r, f] = run(k2);
  const auto eb2 = eb_bound_check(k2, r, f);
  CHECK(eb2.applicable == (r.rho * r.rho - 2 * r.rho >= 8 - 1e-9));
}

TEST_CASE("component classification") {
  CHECK(classify_component(complete_graph(5)) == ComponentClass::k5);
  CHECK(classify_component(complete_graph(5).without_edge(0, 1)) == ComponentClass::k5_minus_e);
  CHECK(classify_component(complete_graph(4)) == ComponentClass::k4);
  CHECK(classify_component(complete_graph(5).without_edge(0, 1).without_edge(2, 3)) == ComponentClass::k5_minus_2e);
  CHECK(classify_component(complete_graph(5).without_edge(0, 1).without_edge(0, 2)) == ComponentClass::k5_minus_2e);
  CHECK(classify_component(complete_graph(2)) == ComponentClass::k2);
  CHECK(classify_component(star_graph(4)) == ComponentClass::star);
  CHECK(classify_component(join(complete_graph(1), disjoint_union(complete_graph(3), empty_graph(2)))) ==
        ComponentClass::k1_join_k3_plus_isolated);
  CHECK(classify_component(build_extremal(2, 21)) == ComponentClass::k2_join_isolated);
  CHECK(classify_component(cycle_graph(5)) == ComponentClass::other);
}

TEST_CASE("claim ceilings on the extremal host") {
  const Graph g = build_extremal(3, 33);
  auto [p, d] = run(g);
  const auto rep = claim_ceilings(g, p, d);
  REQUIRE(rep.applicable);
  REQUIRE(rep.components.size() == 1);
  const auto& c = rep.components[0];
  CHECK(c.cls == ComponentClass::k2_join_isolated);
  CHECK(c.ceiling == -3.0);
  CHECK(c.eta == doctest::Approx(-3.0).epsilon(1e-9));
  CHECK(c.satisfied);
  CHECK(rep.all_satisfied());
}

TEST_CASE("claim ceilings: K1 ∨ (K3 ∪ 2K1) component") {
  // H = K1 ∨ (K3 ∪ 2K1) on 0..5 plus vertex 6 joined to all of H. Vertices 0
  // and 6 are twins, so u* = 0 and the neighbourhood graph is a copy of H.
  const Graph h = join(complete_graph(1), disjoint_union(complete_graph(3), empty_graph(2)));
  const Graph g = join(h, complete_graph(1));
  auto [p, d] = run(g);
  REQUIRE(d.ustar == 0);
  const auto rep = claim_ceilings(g, p, d);
  CHECK(rep.applicable);
  REQUIRE(rep.components.size() == 1);
  CHECK(rep.components[0].cls == ComponentClass::k1_join_k3_plus_isolated);
  CHECK(rep.components[0].strict);
  CHECK(rep.components[0].ceiling == -2.0);
  CHECK(rep.all_satisfied());
}

TEST_CASE("claim ceilings with an independent neighbourhood") {
  const Graph g = complete_bipartite(3, 3);
  auto [p, d] = run(g);
  const auto rep = claim_ceilings(g, p, d);
  CHECK(rep.applicable);
  CHECK(rep.components.empty());
  CHECK(rep.all_satisfied());
}

TEST_CASE("inapplicable when the neighbourhood contains P6") {
  const Graph g = join(complete_graph(1), path_graph(6));
  auto [p, d] = run(g);
  CHECK_FALSE(claim_ceilings(g, p, d).applicable);
}

TEST_CASE("size identity exact and eigen identities on 1000 random connected graphs") {
  testing::Engine rng(79);
  for (int i = 0; i < 1000; ++i) {
    const Graph g = testing::random_connected(rng, 2 + static_cast<int>(rng() % 15), 0.05 + static_cast<double>(rng() % 60) / 100.0);
    auto [p, d] = run(g);
    REQUIRE(d.size_identity_holds(g.size()));
    const auto ids = eigen_identities(g, p, d);
    REQUIRE(ids.first_holds);
    REQUIRE(ids.second_holds);
    const auto eb = eb_bound_check(g, p, d);
    if (eb.applicable) REQUIRE(eb.direct_holds);
    const auto rep = claim_ceilings(g, p, d);
    if (rep.applicable) REQUIRE(rep.all_satisfied());
  }
}

}
