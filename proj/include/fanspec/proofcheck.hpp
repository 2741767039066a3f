#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fanspec/graph.hpp"
#include "fanspec/spectral.hpp"

namespace fanspec {

/// Partition of V(G) around a vertex u* of maximum Perron entry:
/// A = N(u*), A0 = vertices of A isolated in G[A], A+ = A \ A0,
/// B = V \ (A ∪ {u*}), plus the components of G[A+].
struct Decomposition {
  int ustar = -1;
  VertexSet a;
  VertexSet a0;
  VertexSet aplus;
  VertexSet b;
  std::vector<VertexSet> gamma;
  int e_aplus = 0;
  int e_ab = 0;
  int e_b = 0;

  /// m == |A| + e(A+) + e(A,B) + e(B), in integers.
  bool size_identity_holds(int m) const { return m == a.count() + e_aplus + e_ab + e_b; }
};

/// Throws ContractError for disconnected graphs or Perron data of the wrong
/// length. u* ties within 1e-12 go to the lowest index.
Decomposition decompose(const Graph& g, const PerronData& p);

/// sum_u (d_H(u) - 2) r_u - e(H). Throws ParameterError unless every ratio
/// lies in (0, 1] and there is one per vertex.
double eta(const Graph& h, std::span<const double> ratios);

struct IdentityReport {
  /// rho x_{u*} - sum_{A} x_u
  double first_residual = 0.0;
  /// rho^2 x_{u*} - (|A| x_{u*} + sum_{A+} d_A(u) x_u + sum_B d_A(w) x_w)
  double second_residual = 0.0;
  bool first_holds = false;
  bool second_holds = false;
};

inline constexpr double kIdentityTolerance = 1e-8;

IdentityReport eigen_identities(const Graph& g, const PerronData& p, const Decomposition& d);

struct EdgeBoundReport {
  bool applicable = false;  // rho^2 - 2 rho >= m - 3
  double rho_gap = 0.0;     // rho^2 - 2 rho - (m - 3)
  int e_b = 0;
  /// sum_{A+} (d_A(u) - 2) r_u - e(A+) - 2 sum_{A0} r_v + 3
  double direct_bound = 0.0;
  /// sum over components of eta - 2 sum_{A0} r_v + 3
  double eta_bound = 0.0;
  bool direct_holds = true;
  bool eta_holds = true;
  /// e(B) <= 3, which follows when every component has eta <= 0
  bool at_most_three = true;
};

EdgeBoundReport eb_bound_check(const Graph& g, const PerronData& p, const Decomposition& d);

enum class ComponentClass {
  k5,
  k5_minus_e,
  k4,
  k5_minus_2e,
  k2,
  star,
  k1_join_k3_plus_isolated,
  k2_join_isolated,
  other,
};

std::string to_string(ComponentClass c);

/// Exact classification by canonical label against the named families.
ComponentClass classify_component(const Graph& h);

struct ComponentEta {
  Graph component;
  VertexSet vertices;
  ComponentClass cls = ComponentClass::other;
  int min_degree = 0;
  double eta = 0.0;
  double ceiling = 0.0;
  bool strict = false;
  bool satisfied = false;
  /// Necessary equality condition: x_u = x_{u*} for every u with d_H(u) >= 3.
  bool equality_condition_met = false;
};

struct EtaReport {
  /// False when G[A] contains P6 (the ceilings are not claimed then).
  bool applicable = false;
  std::vector<ComponentEta> components;
  bool all_satisfied() const;
};

EtaReport claim_ceilings(const Graph& g, const PerronData& p, const Decomposition& d);

/// The Perron ratios x_u / x_{u*} of the members of s, in vertex order.
std::vector<double> perron_ratios(const PerronData& p, int ustar, const VertexSet& s);

}  // namespace fanspec
