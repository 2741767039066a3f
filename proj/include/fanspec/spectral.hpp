#pragma once

#include <span>
#include <vector>

#include "fanspec/graph.hpp"

namespace fanspec {

/// Internal convergence tolerance of the eigensolver.
inline constexpr double kSolverTolerance = 1e-12;
/// Tolerance for cross-checks between independent spectral routes.
inline constexpr double kCrossCheckTolerance = 1e-9;
/// Minimum gap for a spectral inequality to count as strict.
inline constexpr double kStrictGap = 1e-12;

struct PerronData {
  double rho = 0.0;
  /// Max-norm-normalised Perron vector (max entry 1).
  std::vector<double> x;
  /// max_v |(Ax)_v - rho x_v|
  double residual = 0.0;
  long iterations = 0;
  /// True when the dense Jacobi fallback produced the result.
  bool used_fallback = false;
};

/// Row-major dense square matrix.
struct DenseMatrix {
  int dim = 0;
  std::vector<double> a;

  explicit DenseMatrix(int d = 0) : dim(d), a(static_cast<std::size_t>(d) * static_cast<std::size_t>(d), 0.0) {}
  double& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim) + static_cast<std::size_t>(j)]; }
  double operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim) + static_cast<std::size_t>(j)]; }
};

struct SymmetricEigen {
  std::vector<double> values;  // ascending
  DenseMatrix vectors;         // column j pairs with values[j]
};

/// Cyclic Jacobi rotations for a symmetric matrix.
SymmetricEigen jacobi_eigen(DenseMatrix m, double tol = 1e-15, int max_sweeps = 100);

DenseMatrix adjacency_matrix(const Graph& g);

/// Largest adjacency eigenvalue and its Perron vector.
///
/// Power iteration on A + I from the all-ones vector, stopping once the
/// residual is below kSolverTolerance and successive estimates agree to
/// 1e-13 * max(1, rho); falls back to Jacobi for n <= 64 if 10^6 iterations do not
/// suffice. For disconnected graphs the vector is supported on one
/// component of maximum radius (lowest canonical label, then lowest
/// vertex, on ties) and is zero elsewhere.
PerronData spectral_radius(const Graph& g);

/// y^T A y / y^T y. Throws ParameterError for the zero vector.
double rayleigh_quotient(const Graph& g, std::span<const double> y);

/// max_v |(Ay)_v - rho y_v|
double eigen_residual(const Graph& g, std::span<const double> y, double rho);

struct QuotientMatrix {
  std::vector<VertexSet> partition;
  /// entry (i, j): neighbours in cell j of a vertex of cell i (the mean when
  /// the partition is not equitable).
  DenseMatrix matrix;
  bool equitable = false;
};

/// Throws ParameterError unless the cells cover V(g) disjointly.
QuotientMatrix quotient_matrix(const Graph& g, const std::vector<VertexSet>& partition);

/// Largest eigenvalue of an equitable quotient, computed on its symmetrised
/// form diag(|C|)^{1/2} B diag(|C|)^{-1/2}. Throws ContractError if the
/// quotient is not equitable.
double quotient_rho(const QuotientMatrix& q);

/// (k - 1 + sqrt(4m - k^2 + 1)) / 2. Throws ParameterError for a negative
/// discriminant.
double closed_form_bound(int k, long m);

}  // namespace fanspec
