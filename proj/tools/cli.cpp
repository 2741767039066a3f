#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "fanspec/canon.hpp"
#include "fanspec/errors.hpp"
#include "fanspec/families.hpp"
#include "fanspec/graph6.hpp"
#include "fanspec/json_io.hpp"

#ifndef FANSPEC_VERSION
#define FANSPEC_VERSION "0.0.0"
#endif

namespace fanspec::cli {

namespace {

// Bad input that is not a ParseError from the library (files, line context).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputGraph {
  int line = 0;
  std::string text;
  Graph graph;
};

std::vector<InputGraph> read_graphs(std::istream& in) {
  std::vector<InputGraph> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
    if (line.empty()) continue;
    try {
      Graph g = graph6_decode(line);
      out.push_back({number, line, std::move(g)});
    } catch (const ParseError& e) {
      throw InputError("line " + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

std::string num(double v, int precision = 12) {
  std::ostringstream os;
  os << std::setprecision(precision) << v;
  return os.str();
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

void print_table(std::ostream& os, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size() && c < width.size(); ++c) width[c] = std::max(width[c], r[c].size());
  auto emit = [&](const std::vector<std::string>& r) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      line += r[c];
      if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
    }
    os << line << '\n';
  };
  emit(header);
  for (const auto& r : rows) emit(r);
}

struct Args {
  bool json = false;
  std::string input = "-";

  std::string forbid = "none";
  int m = 0;
  std::optional<int> max_n;
  int cap = kDefaultFeasibilityCap;
  bool force = false;
  int threads = 1;
  bool emit_argmax = false;

  int restarts = 16;
  std::uint64_t seed = 1;
  long steps = 20000;
  bool anneal = false;
  std::optional<int> pool;
  std::string trace_csv;
  bool with_traces = false;

  int k = 0;
  int m_from = 0;
  int m_to = 0;
  std::string mode = "exhaustive";

  std::string family;
};

class Runner {
 public:
  Runner(const Args& a, std::istream& in, std::ostream& out) : a_(a), in_(in), out_(out) {}

  int rho();
  int free();
  int scan();
  int enumerate();
  int search();
  int conjecture();
  int proofcheck();
  int certify();
  int build();

 private:
  std::vector<InputGraph> inputs() {
    if (a_.input == "-") return read_graphs(in_);
    std::ifstream f(a_.input);
    if (!f) throw InputError("cannot open input file '" + a_.input + "'");
    return read_graphs(f);
  }

  // One manifest per run in JSON mode.
  void manifest(const std::string& sub, Json params, std::optional<std::uint64_t> seed, Json result) {
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    Json j{{"schema", kSchemaVersion}, {"subcommand", sub},       {"version", FANSPEC_VERSION},
           {"parameters", std::move(params)}, {"seed", nullptr}, {"wall_time_s", wall},
           {"result", std::move(result)}};
    if (seed) j["seed"] = *seed;
    out_ << j.dump(2) << '\n';
  }

  SearchConfig search_config(int m, const Forbidden& f) const {
    SearchConfig cfg;
    cfg.m = m;
    cfg.forbid = f;
    cfg.restarts = a_.restarts;
    cfg.max_steps = a_.steps;
    cfg.seed = a_.seed;
    cfg.acceptance = a_.anneal ? Acceptance::anneal : Acceptance::hill_climb;
    cfg.pool = a_.pool;
    cfg.threads = a_.threads;
    return cfg;
  }

  Json search_params() const {
    return {{"restarts", a_.restarts},
            {"steps", a_.steps},
            {"acceptance", a_.anneal ? "anneal" : "hill-climb"},
            {"pool", a_.pool ? Json(*a_.pool) : Json(nullptr)},
            {"threads", a_.threads}};
  }

  const Args& a_;
  std::istream& in_;
  std::ostream& out_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

int Runner::rho() {
  Json records = Json::array();
  std::vector<std::vector<std::string>> rows;
  for (const auto& in : inputs()) {
    PerronData p = spectral_radius(in.graph);
    records.push_back({{"line", in.line},
                       {"graph6", in.text},
                       {"n", in.graph.order()},
                       {"m", in.graph.size()},
                       {"rho", p.rho},
                       {"residual", p.residual},
                       {"iterations", p.iterations}});
    rows.push_back({std::to_string(in.line), std::to_string(in.graph.order()), std::to_string(in.graph.size()),
                    num(p.rho), num(p.residual, 3)});
  }
  if (a_.json)
    manifest("rho", Json::object(), std::nullopt, records);
  else
    print_table(out_, {"line", "n", "m", "rho", "residual"}, rows);
  return kOk;
}

int Runner::free() {
  const Forbidden f = Forbidden::parse(a_.forbid);
  const Graph pattern = f.pattern();
  Json records = Json::array();
  std::vector<std::vector<std::string>> rows;
  for (const auto& in : inputs()) {
    auto w = f.find(in.graph);
    if (w && !validate_witness(in.graph, pattern, *w))
      throw ContractError("detector returned an invalid witness on line " + std::to_string(in.line));
    records.push_back({{"line", in.line},
                       {"graph6", in.text},
                       {"verdict", w ? "contains" : "free"},
                       {"witness", w ? to_json(*w) : Json(nullptr)}});
    rows.push_back({std::to_string(in.line), w ? "contains" : "free", w ? join_ints(w->mapping) : "-"});
  }
  if (a_.json)
    manifest("free", {{"forbid", f.name()}}, std::nullopt, records);
  else
    print_table(out_, {"line", "verdict", "witness"}, rows);
  return kOk;
}

int Runner::scan() {
  ScanOptions so;
  so.m = a_.m;
  so.forbid = Forbidden::parse(a_.forbid);
  so.max_n = a_.max_n;
  so.cap = a_.cap;
  so.force = a_.force;
  so.threads = a_.threads;
  const ScanReport r = extremal_scan(so);
  if (a_.emit_argmax) {
    for (const auto& g6 : r.argmax) out_ << g6 << '\n';
    return kOk;
  }
  if (a_.json) {
    manifest("scan",
             {{"m", a_.m}, {"forbid", so.forbid.name()}, {"max_n", a_.max_n ? Json(*a_.max_n) : Json(nullptr)},
              {"cap", a_.cap}, {"force", a_.force}},
             std::nullopt, to_json(r));
    return kOk;
  }
  out_ << "m " << r.m << "  forbid " << r.predicate << "  classes " << r.graph_count << "  best rho "
       << num(r.best_rho) << '\n';
  out_ << "argmax (" << r.argmax.size() << "):\n";
  for (const auto& g6 : r.argmax) out_ << "  " << g6 << '\n';
  std::vector<std::vector<std::string>> rows;
  for (std::size_t b = 0; b < r.histogram.counts.size(); ++b) {
    if (r.histogram.counts[b] == 0) continue;
    const double lo = static_cast<double>(b) * r.histogram.bin_width;
    rows.push_back({"[" + num(lo) + ", " + num(lo + r.histogram.bin_width) + ")", std::to_string(r.histogram.counts[b])});
  }
  print_table(out_, {"rho bin", "classes"}, rows);
  return kOk;
}

int Runner::enumerate() {
  EnumerateOptions eo;
  eo.m = a_.m;
  eo.forbid = Forbidden::parse(a_.forbid);
  eo.max_n = a_.max_n;
  eo.cap = a_.cap;
  eo.force = a_.force;
  if (!a_.json) {
    enumerate_graphs(eo, [&](const Graph& g) { out_ << graph6_encode(canonical_graph(g)) << '\n'; });
    return kOk;
  }
  Json graphs = Json::array();
  enumerate_graphs(eo, [&](const Graph& g) { graphs.push_back(graph6_encode(canonical_graph(g))); });
  const auto count = graphs.size();
  manifest("enumerate", {{"m", a_.m}, {"forbid", eo.forbid.name()}, {"cap", a_.cap}, {"force", a_.force}},
           std::nullopt, {{"count", count}, {"graphs", std::move(graphs)}});
  return kOk;
}

int Runner::search() {
  const Forbidden f = Forbidden::parse(a_.forbid);
  const SearchReport r = local_search(search_config(a_.m, f));
  if (!a_.trace_csv.empty()) {
    std::ofstream csv(a_.trace_csv);
    if (!csv) throw InputError("cannot write trace file '" + a_.trace_csv + "'");
    csv << "restart,step,rho\n" << std::setprecision(17);
    for (std::size_t i = 0; i < r.restarts.size(); ++i)
      for (const auto& t : r.restarts[i].trace) csv << i << ',' << t.step << ',' << t.rho << '\n';
  }
  if (a_.json) {
    Json params = search_params();
    params["m"] = a_.m;
    params["forbid"] = f.name();
    manifest("search", params, a_.seed, to_json(r, a_.with_traces));
  } else {
    out_ << "m " << r.m << "  forbid " << r.predicate << "  seed " << r.seed << '\n';
    out_ << "best rho " << num(r.best_rho) << "  graph6 " << r.best_graph6 << "  restart " << r.best_restart << '\n';
    if (r.bound_comparison.bound)
      out_ << "bound " << num(*r.bound_comparison.bound) << " (k=" << *r.bound_comparison.k << ")"
           << (r.bound_comparison.exceeded ? "  VIOLATION" : "  not exceeded") << '\n';
    if (r.extremal_defined) out_ << "isomorphic to extremal graph: " << (r.iso_to_extremal ? "yes" : "no") << '\n';
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < r.restarts.size(); ++i) {
      const auto& x = r.restarts[i];
      rows.push_back({std::to_string(i), x.feasible ? num(x.best_rho) : "infeasible", std::to_string(x.accepted),
                      x.best_graph6});
    }
    print_table(out_, {"restart", "best rho", "accepted", "graph6"}, rows);
  }
  return r.bound_comparison.exceeded ? kViolation : kOk;
}

int Runner::conjecture() {
  if (a_.k < 1) throw ParameterError("k must be at least 1");
  if (a_.m_from < 1 || a_.m_to < a_.m_from) throw ParameterError("need 1 <= m-from <= m-to");
  const bool exhaustive = a_.mode == "exhaustive";
  if (exhaustive && a_.m_to > a_.cap && !a_.force)
    throw CapacityError("m=" + std::to_string(a_.m_to) + " exceeds the feasibility cap of " + std::to_string(a_.cap) +
                        " (override with --force)");

  Json cells = Json::array();
  std::vector<std::vector<std::string>> rows;
  int violations = 0;
  for (int m = a_.m_from; m <= a_.m_to; ++m) {
    for (int order : {2 * a_.k + 1, 2 * a_.k + 2}) {
      const Forbidden f = Forbidden::fan(order);
      std::optional<double> bound;
      if (4L * m - static_cast<long>(a_.k) * a_.k + 1 >= 0) bound = closed_form_bound(a_.k, m);
      const bool defined = extremal_exists(a_.k, m);
      double best = 0.0;
      bool iso = false;
      Json witness;
      if (exhaustive) {
        ScanOptions so;
        so.m = m;
        so.forbid = f;
        so.cap = a_.cap;
        so.force = a_.force;
        so.threads = a_.threads;
        const ScanReport r = extremal_scan(so);
        best = r.best_rho;
        witness = r.argmax;
        if (defined) {
          const auto target = graph6_encode(canonical_graph(build_extremal(a_.k, m)));
          iso = std::find(r.argmax.begin(), r.argmax.end(), target) != r.argmax.end();
        }
      } else {
        const SearchReport r = local_search(search_config(m, f));
        best = r.best_rho;
        witness = Json::array({r.best_graph6});
        iso = r.iso_to_extremal;
      }
      const bool violated = bound && best > *bound + kViolationTolerance;
      const bool attained = bound && std::abs(best - *bound) <= kViolationTolerance;
      violations += violated ? 1 : 0;
      cells.push_back({{"k", a_.k},
                       {"m", m},
                       {"forbid", f.name()},
                       {"bound", bound ? Json(*bound) : Json(nullptr)},
                       {"best_rho", best},
                       {"attained", attained},
                       {"extremal_defined", defined},
                       {"extremal_iso", iso},
                       {"method", exhaustive ? "exhaustive" : "search"},
                       {"status", violated ? "VIOLATION" : "ok"},
                       {"best_graph6", witness}});
      rows.push_back({std::to_string(m), f.name(), bound ? num(*bound) : "-", num(best), attained ? "yes" : "no",
                      defined ? (iso ? "yes" : "no") : "n/a", violated ? "VIOLATION" : "ok"});
    }
  }
  if (a_.json) {
    Json params{{"k", a_.k}, {"m_from", a_.m_from}, {"m_to", a_.m_to}, {"mode", a_.mode}};
    if (exhaustive) {
      params["cap"] = a_.cap;
      params["force"] = a_.force;
    } else {
      params.update(search_params());
    }
    manifest("conjecture", params, exhaustive ? std::nullopt : std::optional<std::uint64_t>(a_.seed),
             {{"cells", cells}, {"violations", violations}});
  } else {
    print_table(out_, {"m", "forbid", "bound", "best rho", "attained", "extremal iso", "status"}, rows);
    if (!exhaustive) out_ << "seed " << a_.seed << '\n';
    out_ << violations << " violation(s)\n";
  }
  return violations ? kViolation : kOk;
}

int Runner::proofcheck() {
  Json records = Json::array();
  std::vector<std::vector<std::string>> rows;
  bool failed = false;
  for (const auto& in : inputs()) {
    const Graph g = in.graph.strip_isolated();
    Json rec{{"line", in.line}, {"graph6", in.text}, {"connected", g.order() > 0 && g.is_connected()}};
    if (!rec["connected"].get<bool>()) {
      records.push_back(rec);
      rows.push_back({std::to_string(in.line), "disconnected", "-", "-", "-", "-"});
      continue;
    }
    const PerronData p = spectral_radius(g);
    const Decomposition d = decompose(g, p);
    const IdentityReport ids = eigen_identities(g, p, d);
    const EdgeBoundReport eb = eb_bound_check(g, p, d);
    const EtaReport er = claim_ceilings(g, p, d);
    const bool size_ok = d.size_identity_holds(g.size());
    const bool ok = size_ok && ids.first_holds && ids.second_holds && (!eb.applicable || eb.direct_holds) &&
                    (!er.applicable || er.all_satisfied());
    failed |= !ok;
    rec["rho"] = p.rho;
    rec["decomposition"] = to_json(d);
    rec["size_identity"] = {{"m", g.size()}, {"holds", size_ok}};
    rec["identities"] = to_json(ids);
    rec["edge_bound"] = to_json(eb);
    rec["eta"] = to_json(er);
    rec["ok"] = ok;
    records.push_back(rec);
    std::string eta_col = er.applicable ? (er.all_satisfied() ? "ok" : "VIOLATED") : "n/a";
    std::string eb_col = eb.applicable ? (eb.direct_holds ? "ok" : "VIOLATED") : "n/a";
    rows.push_back({std::to_string(in.line), num(p.rho), std::to_string(d.ustar), size_ok ? "ok" : "FAILED",
                    ids.first_holds && ids.second_holds ? "ok" : "FAILED", eb_col + "/" + eta_col});
  }
  if (a_.json)
    manifest("proofcheck", Json::object(), std::nullopt, records);
  else
    print_table(out_, {"line", "rho", "u*", "size identity", "eigen identities", "e(B)/eta"}, rows);
  return failed ? kViolation : kOk;
}

int Runner::certify() {
  const Forbidden f = Forbidden::parse(a_.forbid);
  Json records = Json::array();
  std::vector<std::vector<std::string>> rows;
  for (const auto& in : inputs()) {
    const LocalMaxReport r = is_local_max(in.graph, f);
    Json merged{{"line", in.line}, {"graph6", in.text}};
    merged.update(to_json(r));
    records.push_back(merged);
    rows.push_back({std::to_string(in.line), num(r.rho), r.is_local_max ? "yes" : "no", std::to_string(r.moves_checked),
                    r.best_move ? r.best_move->description : "-"});
  }
  if (a_.json)
    manifest("certify", {{"forbid", f.name()}}, std::nullopt, records);
  else
    print_table(out_, {"line", "rho", "local max", "moves", "best move"}, rows);
  return kOk;
}

int Runner::build() {
  const Graph g = build_family(parse_family(a_.family));
  const std::string g6 = graph6_encode(g);
  if (a_.json)
    manifest("build", {{"family", a_.family}}, std::nullopt,
             {{"graph6", g6}, {"n", g.order()}, {"m", g.size()}});
  else
    out_ << g6 << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Args a;
  CLI::App app{"Spectral extremal toolkit for fan-free graphs", "fanspec"};
  app.set_version_flag("--version", FANSPEC_VERSION);
  app.require_subcommand(1);

  auto add_json = [&](CLI::App* s) { s->add_flag("--json", a.json, "Emit a JSON run manifest"); };
  auto add_input = [&](CLI::App* s) { s->add_option("-i,--input", a.input, "graph6 file, one graph per line ('-' for stdin)"); };
  auto add_forbid = [&](CLI::App* s, bool required) {
    auto* o = s->add_option("--forbid", a.forbid, "Forbidden subgraph: none, fan:<order>, c6d or f3");
    if (required) o->required();
  };
  auto add_capacity = [&](CLI::App* s) {
    s->add_option("--cap", a.cap, "Largest m accepted without --force")->check(CLI::PositiveNumber);
    s->add_flag("--force", a.force, "Ignore the feasibility cap");
  };
  auto add_search = [&](CLI::App* s) {
    s->add_option("--restarts", a.restarts, "Independent restarts")->check(CLI::PositiveNumber);
    s->add_option("--seed", a.seed, "Base seed (restart i uses seed + i)");
    s->add_option("--steps", a.steps, "Proposals per restart")->check(CLI::NonNegativeNumber);
    s->add_flag("--anneal", a.anneal, "Simulated annealing instead of hill climbing");
    s->add_option("--pool", a.pool, "Vertices available to the search (default m + 1)");
  };
  auto add_threads = [&](CLI::App* s) { s->add_option("--threads", a.threads, "Worker threads")->check(CLI::PositiveNumber); };

  auto* rho = app.add_subcommand("rho", "Spectral radius of each input graph");
  add_json(rho);
  add_input(rho);

  auto* free = app.add_subcommand("free", "Forbidden-subgraph verdict and witness for each input graph");
  add_json(free);
  add_input(free);
  add_forbid(free, true);

  auto* scan = app.add_subcommand("scan", "Exhaustive maximum spectral radius over m-edge graphs");
  add_json(scan);
  scan->add_option("--m", a.m, "Number of edges")->required()->check(CLI::PositiveNumber);
  add_forbid(scan, false);
  scan->add_option("--max-n", a.max_n, "Largest order considered (default 2m)");
  add_capacity(scan);
  add_threads(scan);
  scan->add_flag("--emit-argmax", a.emit_argmax, "Print only the maximisers as graph6")->excludes("--json");

  auto* enumerate = app.add_subcommand("enumerate", "Stream one graph6 line per isomorphism class");
  add_json(enumerate);
  enumerate->add_option("--m", a.m, "Number of edges")->required()->check(CLI::PositiveNumber);
  add_forbid(enumerate, false);
  enumerate->add_option("--max-n", a.max_n, "Largest order considered (default 2m)");
  add_capacity(enumerate);

  auto* search = app.add_subcommand("search", "Local search for spectral maximisers");
  add_json(search);
  search->add_option("--m", a.m, "Number of edges")->required()->check(CLI::PositiveNumber);
  add_forbid(search, true);
  add_search(search);
  add_threads(search);
  search->add_option("--trace-csv", a.trace_csv, "Write per-restart (step, rho) traces to this file");
  search->add_flag("--with-traces", a.with_traces, "Include traces in the JSON report");

  auto* conj = app.add_subcommand("conjecture", "Compare best spectral radius against the conjectured bound");
  add_json(conj);
  conj->add_option("--k", a.k, "Fan parameter; cells use fan:2k+1 and fan:2k+2")->required();
  conj->add_option("--m-from", a.m_from, "First m")->required();
  conj->add_option("--m-to", a.m_to, "Last m")->required();
  conj->add_option("--mode", a.mode, "exhaustive or search")->check(CLI::IsMember({"exhaustive", "search"}));
  add_capacity(conj);
  add_search(conj);
  add_threads(conj);

  auto* proof = app.add_subcommand("proofcheck", "Decomposition, identities and eta report for each input graph");
  add_json(proof);
  add_input(proof);

  auto* certify = app.add_subcommand("certify", "Check that each input graph is a local maximum under single moves");
  add_json(certify);
  add_input(certify);
  add_forbid(certify, true);

  auto* build = app.add_subcommand("build", "Print a named graph as graph6");
  add_json(build);
  build->add_option("family", a.family, "e.g. fan:7, extremal-join:3,33, complete-bipartite:3,3")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  if (a.restarts < 1) a.restarts = 1;
  Runner r(a, in, out);
  try {
    if (*rho) return r.rho();
    if (*free) return r.free();
    if (*scan) return r.scan();
    if (*enumerate) return r.enumerate();
    if (*search) return r.search();
    if (*conj) return r.conjecture();
    if (*proof) return r.proofcheck();
    if (*certify) return r.certify();
    if (*build) return r.build();
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kCapacity;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace fanspec::cli
