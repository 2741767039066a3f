#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fanspec/freeness.hpp"
#include "fanspec/graph.hpp"

namespace fanspec {

/// Portable random source for the search.
///
/// The engine is std::mt19937_64 (MT19937-64, whose output sequence is fixed
/// by the C++ standard). Integers in [0, n) are drawn by rejection on the raw
/// 64-bit output; reals in [0, 1) take the top 53 bits. No standard library
/// distribution is involved, so traces reproduce across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);
  double uniform();

 private:
  std::mt19937_64 engine_;
};

enum class Acceptance { hill_climb, anneal };

struct SearchConfig {
  int m = 1;
  Forbidden forbid;
  int restarts = 16;
  long max_steps = 20000;
  std::uint64_t seed = 1;
  double relocation_weight = 1.0;
  double kelmans_weight = 1.0;
  Acceptance acceptance = Acceptance::hill_climb;
  double plateau_tolerance = 1e-12;
  int plateau_cap = 100;
  /// Annealing schedule: temperature t0 * cooling^step.
  double anneal_t0 = 0.5;
  double anneal_cooling = 0.9995;
  /// Vertices available to the search; defaults to m + 1.
  std::optional<int> pool;
  int threads = 1;
  /// Re-run the full freeness detector on every accepted graph.
  bool verify_steps = false;
};

/// Throws ParameterError for restarts < 1, negative weights or both zero.
void validate(const SearchConfig& cfg);

struct TracePoint {
  long step = 0;
  double rho = 0.0;
};

struct RestartResult {
  bool feasible = true;
  double best_rho = 0.0;
  std::string best_graph6;
  std::vector<TracePoint> trace;
  long accepted = 0;
};

struct BoundComparison {
  /// k for which the forbidden graph is H_{2k+1} or H_{2k+2} (3 for c6d/f3).
  std::optional<int> k;
  std::optional<double> bound;
  /// best_rho > bound + 1e-8
  bool exceeded = false;
};

struct SearchReport {
  int m = 0;
  std::string predicate;
  std::uint64_t seed = 0;
  bool feasible = true;
  /// graph6 of the canonical form of the best graph, isolated vertices removed.
  std::string best_graph6;
  double best_rho = 0.0;
  int best_restart = -1;
  std::vector<RestartResult> restarts;
  BoundComparison bound_comparison;
  /// Whether the closed-form extremal graph exists for (k, m).
  bool extremal_defined = false;
  bool iso_to_extremal = false;
};

inline constexpr double kViolationTolerance = 1e-8;

/// The k such that (k-1+sqrt(4m-k^2+1))/2 is the relevant ceiling for the
/// forbidden graph, if any.
std::optional<int> bound_parameter(const Forbidden& f);

/// Multi-restart local search over m-edge graphs admitted by cfg.forbid,
/// using single-edge relocation and Perron-directed Kelmans shifts.
SearchReport local_search(const SearchConfig& cfg);

struct MoveCertificate {
  std::string kind;  // "relocate" or "kelmans"
  std::string description;
  double rho = 0.0;
};

struct LocalMaxReport {
  bool is_local_max = false;
  double rho = 0.0;
  long moves_checked = 0;
  /// Best admissible move found (an improving one when is_local_max is false).
  std::optional<MoveCertificate> best_move;
};

/// Scans every single relocation (including onto fresh vertices) and every
/// Kelmans shift that keeps g admitted. Shift sets are enumerated in full
/// when |N(v) \ N(u)| <= 12 and otherwise restricted to singletons plus
/// the full set.
LocalMaxReport is_local_max(const Graph& g, const Forbidden& forbid);

}  // namespace fanspec
