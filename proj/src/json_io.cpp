#include "fanspec/json_io.hpp"

namespace fanspec {

Json to_json(const VertexSet& s) { return s.members(); }

Json to_json(const Witness& w) { return w.mapping; }

Json to_json(const PerronData& p, bool with_vector) {
  Json j{{"rho", p.rho}, {"residual", p.residual}, {"iterations", p.iterations}};
  if (p.used_fallback) j["fallback"] = "jacobi";
  if (with_vector) j["x"] = p.x;
  return j;
}

Json to_json(const Decomposition& d) {
  Json gamma = Json::array();
  for (const auto& c : d.gamma) gamma.push_back(to_json(c));
  return {{"ustar", d.ustar},         {"A", to_json(d.a)},     {"A0", to_json(d.a0)},
          {"Aplus", to_json(d.aplus)}, {"B", to_json(d.b)},     {"gamma", gamma},
          {"e_Aplus", d.e_aplus},     {"e_AB", d.e_ab},       {"e_B", d.e_b}};
}

Json to_json(const IdentityReport& r) {
  return {{"first_residual", r.first_residual},
          {"first_holds", r.first_holds},
          {"second_residual", r.second_residual},
          {"second_holds", r.second_holds}};
}

Json to_json(const EdgeBoundReport& r) {
  Json j{{"applicable", r.applicable}, {"rho_gap", r.rho_gap}, {"e_B", r.e_b},
         {"direct_bound", r.direct_bound}, {"eta_bound", r.eta_bound}};
  if (r.applicable) {
    j["direct_holds"] = r.direct_holds;
    j["eta_holds"] = r.eta_holds;
    j["e_B_at_most_3"] = r.at_most_three;
  }
  return j;
}

Json to_json(const EtaReport& r) {
  Json comps = Json::array();
  for (const auto& c : r.components) {
    comps.push_back({{"vertices", to_json(c.vertices)},
                     {"class", to_string(c.cls)},
                     {"min_degree", c.min_degree},
                     {"eta", c.eta},
                     {"ceiling", c.ceiling},
                     {"strict", c.strict},
                     {"satisfied", c.satisfied},
                     {"equality_condition_met", c.equality_condition_met}});
  }
  return {{"applicable", r.applicable}, {"all_satisfied", r.all_satisfied()}, {"components", comps}};
}

Json to_json(const ScanReport& r) {
  return {{"m", r.m},
          {"predicate", r.predicate},
          {"graph_count", r.graph_count},
          {"best_rho", r.best_rho},
          {"argmax", r.argmax},
          {"histogram", {{"bin_width", r.histogram.bin_width}, {"counts", r.histogram.counts}}}};
}

Json to_json(const SearchReport& r, bool with_traces) {
  Json restarts = Json::array();
  for (const auto& x : r.restarts) {
    Json j{{"feasible", x.feasible}, {"best_rho", x.best_rho}, {"best_graph6", x.best_graph6}, {"accepted", x.accepted}};
    if (with_traces) {
      Json trace = Json::array();
      for (const auto& t : x.trace) trace.push_back({t.step, t.rho});
      j["trace"] = trace;
    }
    restarts.push_back(j);
  }
  Json bound{{"k", nullptr}, {"bound", nullptr}, {"exceeded", r.bound_comparison.exceeded}};
  if (r.bound_comparison.k) bound["k"] = *r.bound_comparison.k;
  if (r.bound_comparison.bound) bound["bound"] = *r.bound_comparison.bound;
  return {{"m", r.m},
          {"predicate", r.predicate},
          {"seed", r.seed},
          {"feasible", r.feasible},
          {"best_graph6", r.best_graph6},
          {"best_rho", r.best_rho},
          {"best_restart", r.best_restart},
          {"bound_comparison", bound},
          {"extremal_defined", r.extremal_defined},
          {"iso_to_extremal", r.iso_to_extremal},
          {"restarts", restarts}};
}

Json to_json(const LocalMaxReport& r) {
  Json j{{"is_local_max", r.is_local_max}, {"rho", r.rho}, {"moves_checked", r.moves_checked}, {"best_move", nullptr}};
  if (r.best_move)
    j["best_move"] = {{"kind", r.best_move->kind}, {"description", r.best_move->description}, {"rho", r.best_move->rho}};
  return j;
}

}  // namespace fanspec
