#include "pavlov/pavlov.h"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <string>

#include <json.hpp>

#include "pavlov/dynamics.hpp"
#include "pavlov/gf2.hpp"
#include "pavlov/graph.hpp"
#include "pavlov/schedulers.hpp"
#include "pavlov/strategies.hpp"
#include "pavlov/verify.hpp"

struct pv_graph {
  pavlov::Graph g;
};

struct pv_scheduler {
  pavlov::SchedulerPtr s;
};

struct pv_strategy {
  pavlov::StrategyPtr st;
};

namespace {

using nlohmann::json;
using namespace pavlov;

thread_local std::string g_last_error;

pv_status to_status(ErrorCode c) { return static_cast<pv_status>(static_cast<int>(c)); }

template <class F>
pv_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return PV_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return PV_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PV_ERR_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void need(const void* p, const char* what) {
  if (!p) fail(ErrorCode::kInvalidArgument, std::string(what) + " must not be NULL");
}

void put(char** out, const std::string& s) {
  need(out, "output pointer");
  *out = dup(s);
}

Configuration config_for(const Graph& g, const char* x) {
  need(x, "configuration");
  Configuration c = Configuration::parse(x);
  if (c.size() != g.vertex_count())
    fail(ErrorCode::kInvalidArgument, "configuration has " + std::to_string(c.size()) + " labels, graph has n=" +
                                          std::to_string(g.vertex_count()));
  return c;
}

json edge_list(const Graph& g, std::span<const EdgeId> ids) {
  json a = json::array();
  for (EdgeId e : ids) a.push_back({g.edge(e).u, g.edge(e).v});
  return a;
}

/// First single-one start whose periodic run never reaches 0.
std::optional<Vertex> non_stabilizing_start(const Graph& g, std::span<const EdgeId> period) {
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!periodic_outcome(g, Configuration::single_one(g.vertex_count(), v), period).stabilizes) return v;
  return std::nullopt;
}

json start_json(const Graph& g, std::optional<Vertex> v) {
  if (!v) return nullptr;
  return Configuration::single_one(g.vertex_count(), *v).to_string();
}

json two_fair_json(const Graph& g) {
  const auto seq = construct_2fair_enumeration(g);
  std::vector<std::size_t> occ(g.edge_count(), 0);
  for (EdgeId e : seq) ++occ[e];
  const bool counts_ok = std::all_of(occ.begin(), occ.end(), [](std::size_t c) { return c >= 1 && c <= 2; });
  bool shares_one = true;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const Edge& a = g.edge(seq[i]);
    const Edge& b = g.edge(seq[(i + 1) % seq.size()]);
    const int common = static_cast<int>(b.touches(a.u)) + static_cast<int>(b.touches(a.v));
    shares_one = shares_one && common == 1;
  }
  std::vector<EdgeId> thrice;
  for (int k = 0; k < 3; ++k) thrice.insert(thrice.end(), seq.begin(), seq.end());
  const FairnessReport f = fairness_monitor(std::vector<Vertex>(thrice.begin(), thrice.end()),
                                            static_cast<Vertex>(g.edge_count()));
  const auto bad = non_stabilizing_start(g, seq);
  return {{"kind", "two-fair"},
          {"daemon", "edge"},
          {"schedule", edge_list(g, seq)},
          {"length", seq.size()},
          {"occurrences_ok", counts_ok},
          {"consecutive_share_one_vertex", shares_one},
          {"fairness_b", f.b},
          {"never_stabilizing_start", start_json(g, bad)},
          {"valid", counts_ok && shares_one && f.b <= 2 && bad.has_value()}};
}

json one_fair_json(const Graph& g) {
  const OneFairConstruction c = construct_1fair_nonnilpotent(g);
  const auto bad = non_stabilizing_start(g, c.order);
  json j{{"kind", "one-fair"},
         {"daemon", "edge"},
         {"class", class_name(c.cls)},
         {"method", c.method},
         {"schedule", edge_list(g, c.order)},
         {"labeling", c.labeling},
         {"nilpotent", c.nilpotent},
         {"trace_parity", c.trace_parity},
         {"never_stabilizing_start", start_json(g, bad)},
         {"valid", !c.nilpotent && bad.has_value()}};
  j["s2_parity"] = c.s2_parity ? json(*c.s2_parity) : json(nullptr);
  return j;
}

json star_json(const Graph& g) {
  const Vertex leaves = g.vertex_count() - 1;
  if (g.vertex_count() < 2 || g != generate(Family::kStar, leaves))
    fail(ErrorCode::kInvalidArgument, "star-3fair needs the canonical star graph (center 0)");
  const StarSchedule s = star_3fair_schedule(leaves);
  auto sched = sequence_scheduler(g, DaemonKind::kNode, {s.period.begin(), s.period.end()}, 0, 3U, "star-3fair");
  const BranchReport br = enumerate_luck_branches(g, *sched, s.x0, 3 * s.period.size(), s.period.size());
  std::vector<Vertex> trace;
  for (int k = 0; k < 3; ++k) trace.insert(trace.end(), s.period.begin(), s.period.end());
  const FairnessReport f = fairness_monitor(trace, g.vertex_count());
  return {{"kind", "star-3fair"},
          {"daemon", "node"},
          {"period", s.period},
          {"x0", s.x0.to_string()},
          {"branches", br.branches},
          {"returns_to_x0_every_period", br.checkpoints_return},
          {"reached_zero", br.reached_zero},
          {"fairness_b", f.b},
          {"never_scheduled", f.under_scheduled},
          {"valid", br.checkpoints_return && !br.reached_zero && f.b == 3}};
}

json k3_json(const Graph& g) {
  auto sched = k3_adaptive_daemon(g, 0, 0);
  const Configuration ones = Configuration::all_ones(3);
  const BranchReport br = enumerate_luck_branches(g, *sched, ones, 30, 3);
  const LuckGameSolution sol = solve_luck_game(g, *sched, ones, 20);
  return {{"kind", "k3-adaptive"},
          {"daemon", "node (adaptive)"},
          {"blocks", 10},
          {"branches", br.branches},
          {"blocks_end_at_all_ones", br.checkpoints_return},
          {"reached_zero", br.reached_zero},
          {"fairness_b", br.worst_b},
          {"luck_wins", sol.luck_wins},
          {"state_space_closed", sol.state_space_closed},
          {"valid", br.checkpoints_return && !br.reached_zero && br.worst_b <= 2 && !sol.luck_wins}};
}

json theorem1_json(const Graph& g) {
  auto sched = theorem1_stabilizing_daemon(g);
  std::vector<EdgeId> prefix;
  Configuration dummy(g.vertex_count());
  for (std::size_t i = 0; i < 2 * g.edge_count(); ++i) prefix.push_back(sched->next(dummy).edge);
  // two plays of every edge zero any start
  const bool zeroes = schedule_matrix(g, prefix).is_zero();
  return {{"kind", "theorem1"}, {"daemon", "edge"}, {"schedule", edge_list(g, prefix)}, {"zeroes_every_start", zeroes},
          {"valid", zeroes}};
}

std::vector<Vertex> period_hint(const Graph& g, const pv_scheduler* hint) {
  if (!hint) return {};
  const Scheduler& s = *hint->s;
  if (s.kind() != DaemonKind::kNode || s.adaptive() || !s.deterministic()) return {};
  auto copy = s.clone();
  const Configuration dummy(g.vertex_count());
  std::vector<Vertex> order;
  for (Vertex i = 0; i < g.vertex_count(); ++i) order.push_back(copy->next(dummy).node);
  std::vector<Vertex> check = order;
  std::sort(check.begin(), check.end());
  for (Vertex i = 0; i < g.vertex_count(); ++i)
    if (check[i] != i) return {};
  return order;
}

bool is_star(const Graph& g) {
  const Vertex n = g.vertex_count();
  if (n < 2 || g.edge_count() != n - 1) return false;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) == n - 1) return true;
  return false;
}

bool is_path(const Graph& g) {
  if (!is_tree(g)) return false;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 2) return false;
  return true;
}

}  // namespace

extern "C" {

const char* pv_version(void) { return pavlov::version(); }
const char* pv_last_error(void) { return g_last_error.c_str(); }

const char* pv_status_name(pv_status s) {
  switch (s) {
    case PV_OK: return "ok";
    case PV_ERR_INVALID_ARGUMENT: return "invalid argument";
    case PV_ERR_PARSE: return "parse error";
    case PV_ERR_UNSUPPORTED: return "unsupported";
    case PV_ERR_BUDGET_EXCEEDED: return "budget exceeded";
    case PV_ERR_NOT_FOUND: return "not found";
    case PV_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

void pv_string_free(char* s) { std::free(s); }

pv_status pv_graph_generate(const char* family, uint32_t n, pv_graph** out) {
  return guarded([&] {
    need(family, "family");
    need(out, "output pointer");
    const std::string f = family;
    Graph g = f == "k3" ? generate(Family::kComplete, 3) : generate(parse_family(f), n);
    *out = new pv_graph{std::move(g)};
  });
}

pv_status pv_graph_gnp(uint32_t n, double p, uint64_t seed, pv_graph** out) {
  return guarded([&] {
    need(out, "output pointer");
    *out = new pv_graph{sample_gnp(n, p, seed)};
  });
}

pv_status pv_graph_load(const char* path, pv_graph** out) {
  return guarded([&] {
    need(path, "path");
    need(out, "output pointer");
    *out = new pv_graph{load_graph(path)};
  });
}

pv_status pv_graph_parse(const char* text, pv_graph** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "output pointer");
    *out = new pv_graph{parse_graph(text)};
  });
}

pv_status pv_graph_from_edges(uint32_t n, const uint32_t* pairs, size_t m, pv_graph** out) {
  return guarded([&] {
    need(out, "output pointer");
    if (m > 0) need(pairs, "pairs");
    std::vector<Edge> edges;
    for (size_t i = 0; i < m; ++i) edges.push_back({pairs[2 * i], pairs[2 * i + 1]});
    *out = new pv_graph{Graph(n, std::move(edges))};
  });
}

void pv_graph_free(pv_graph* g) { delete g; }
uint32_t pv_graph_vertex_count(const pv_graph* g) { return g ? g->g.vertex_count() : 0; }
size_t pv_graph_edge_count(const pv_graph* g) { return g ? g->g.edge_count() : 0; }

pv_status pv_graph_edge(const pv_graph* g, size_t e, uint32_t* u, uint32_t* v) {
  return guarded([&] {
    need(g, "graph");
    need(u, "u");
    need(v, "v");
    require(e < g->g.edge_count(), "edge index out of range");
    *u = g->g.edge(static_cast<EdgeId>(e)).u;
    *v = g->g.edge(static_cast<EdgeId>(e)).v;
  });
}

pv_status pv_graph_to_text(const pv_graph* g, char** out) {
  return guarded([&] {
    need(g, "graph");
    put(out, format_graph(g->g));
  });
}

pv_status pv_step(const pv_graph* g, const char* x, uint32_t u, uint32_t v, char** out) {
  return guarded([&] {
    need(g, "graph");
    put(out, step(g->g, config_for(g->g, x), u, v).to_string());
  });
}

pv_status pv_scheduler_create(const pv_graph* g, const char* spec, uint64_t seed, pv_scheduler** out) {
  return guarded([&] {
    need(g, "graph");
    need(spec, "spec");
    need(out, "output pointer");
    *out = new pv_scheduler{make_scheduler(g->g, spec, seed)};
  });
}

pv_scheduler* pv_scheduler_clone(const pv_scheduler* s) { return s ? new pv_scheduler{s->s->clone()} : nullptr; }
void pv_scheduler_free(pv_scheduler* s) { delete s; }

pv_status pv_scheduler_specs(char** out) {
  return guarded([&] {
    std::string all;
    for (const auto& s : scheduler_spec_names()) all += s + "\n";
    put(out, all);
  });
}

pv_status pv_scheduler_info(const pv_scheduler* s, char** out) {
  return guarded([&] {
    need(s, "scheduler");
    const Scheduler& sc = *s->s;
    json j{{"kind", sc.kind() == DaemonKind::kEdge ? "edge" : "node"},
           {"adaptive", sc.adaptive()},
           {"deterministic", sc.deterministic()},
           {"description", sc.describe()}};
    j["fairness_bound"] = sc.fairness_bound() ? json(*sc.fairness_bound()) : json(nullptr);
    put(out, j.dump());
  });
}

pv_status pv_scheduler_dump(const pv_scheduler* s, const char* x0, size_t steps, char** out) {
  return guarded([&] {
    need(s, "scheduler");
    const Graph& g = s->s->graph();
    auto copy = s->s->clone();
    Configuration x = x0 ? config_for(g, x0) : Configuration::all_ones(g.vertex_count());
    std::vector<SchedulerDecision> decisions;
    for (size_t i = 0; i < steps; ++i) {
      const SchedulerDecision d = copy->next(x);
      decisions.push_back(d);
      EdgeId e = d.edge;
      if (d.kind == DaemonKind::kNode) e = *g.find_edge(d.node, copy->random_partner(d.node));
      x.play(g.edge(e).u, g.edge(e).v);
    }
    put(out, format_schedule(g, decisions));
  });
}

pv_status pv_simulate(const pv_graph* g, pv_scheduler* s, const char* x0, size_t max_steps, pv_run_result* result,
                      char** final_config, char** trajectory_json) {
  return guarded([&] {
    need(g, "graph");
    need(s, "scheduler");
    need(result, "result");
    const Configuration start = config_for(g->g, x0);
    Scheduler& sc = *s->s;
    const RunResult r = run(
        g->g, start, [&](const Configuration& x) -> std::optional<EdgeId> {
          Configuration probe = x;
          return sc.advance(probe);
        },
        max_steps, trajectory_json != nullptr);
    result->reached_zero = r.reached_zero;
    result->schedule_exhausted = r.schedule_exhausted;
    result->steps = r.steps;
    if (final_config) *final_config = dup(r.final_config.to_string());
    if (trajectory_json) {
      json t = json::array();
      for (const auto& rec : r.trajectory)
        t.push_back({{"t", rec.time},
                     {"edge", {g->g.edge(rec.edge).u, g->g.edge(rec.edge).v}},
                     {"config", rec.after.to_string()}});
      *trajectory_json = dup(t.dump());
    }
  });
}

size_t pv_default_max_steps(uint32_t n) { return default_max_steps(n); }

pv_status pv_estimate(const pv_graph* g, const char* scheduler_spec, const char* x0, size_t trials, size_t max_rounds,
                      uint64_t seed, unsigned threads, pv_estimate_result* out) {
  return guarded([&] {
    need(g, "graph");
    need(scheduler_spec, "scheduler spec");
    need(out, "result");
    const std::string spec = scheduler_spec;
    (void)make_scheduler(g->g, spec, seed);  // surface spec errors before spawning workers
    std::optional<Configuration> start;
    if (x0) start = config_for(g->g, x0);
    const Graph& graph = g->g;
    const auto e = estimate_stabilization(
        graph, [&](std::uint64_t s) { return make_scheduler(graph, spec, s); }, start, trials, max_rounds, seed,
        threads);
    *out = {e.trials, e.successes, e.p_hat, e.stderr_, e.mean_steps};
  });
}

pv_status pv_analyze(const pv_graph* g, const char* perm, int construct, char** out_json) {
  return guarded([&] {
    need(g, "graph");
    const Graph& gr = g->g;
    json j{{"n", gr.vertex_count()}, {"m", gr.edge_count()}, {"connected", is_connected(gr)}, {"tree", is_tree(gr)}};
    j["long_cycle"] = has_long_cycle(gr);
    j["triangles"] = count_triangles(gr);
    std::optional<OneFairClass> cls;
    if (is_connected(gr) && gr.edge_count() >= 2) cls = classify_for_theorem3(gr);
    j["class"] = cls ? json(std::string(class_name(*cls))) : json(nullptr);

    std::vector<EdgeId> order(gr.edge_count());
    std::iota(order.begin(), order.end(), 0);
    if (perm) {
      order.clear();
      std::string p = perm;
      std::size_t pos = 0;
      while (pos <= p.size() && !p.empty()) {
        const auto comma = p.find(',', pos);
        const std::string tok = p.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
          std::size_t used = 0;
          const unsigned long v = std::stoul(tok, &used);
          if (used != tok.size()) throw std::invalid_argument(tok);
          order.push_back(static_cast<EdgeId>(v));
        } catch (const std::logic_error&) {
          fail(ErrorCode::kParse, "bad edge index '" + tok + "' in permutation");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
      (void)labeling_from_order(order);  // validates the permutation
    }
    if (gr.edge_count() > 0) {
      const Gf2Matrix m = schedule_matrix(gr, order);
      int tr = 0;
      for (std::size_t i = 0; i < m.order(); ++i) tr ^= m.get(i, i) ? 1 : 0;
      j["order"] = order;
      j["nilpotent"] = is_nilpotent(m);
      j["trace_parity"] = tr;
      if (is_tree(gr)) {
        const auto lab = labeling_from_order(order);
        j["s2_parity"] = principal_minor_parity(integer_schedule_matrix(gr, lab), std::min<std::size_t>(2, gr.vertex_count()));
      }
    }
    if (construct) {
      if (!cls) fail(ErrorCode::kUnsupported, "construction needs a connected graph with m >= 2");
      j["construction"] = one_fair_json(gr);
    }
    put(out_json, j.dump(2));
  });
}

pv_status pv_is_nilpotent(const pv_graph* g, const uint32_t* order, size_t m, int* out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "result");
    if (m > 0) need(order, "order");
    std::vector<EdgeId> o(order, order + m);
    (void)labeling_from_order(o);
    require(o.size() == g->g.edge_count(), "order must list every edge");
    *out = is_nilpotent(schedule_matrix(g->g, o)) ? 1 : 0;
  });
}

pv_status pv_construct(const pv_graph* g, const char* kind, char** out_json) {
  return guarded([&] {
    need(g, "graph");
    need(kind, "kind");
    const std::string k = kind;
    json j;
    if (k == "two-fair") {
      j = two_fair_json(g->g);
    } else if (k == "one-fair") {
      j = one_fair_json(g->g);
    } else if (k == "star-3fair") {
      j = star_json(g->g);
    } else if (k == "k3-adaptive") {
      j = k3_json(g->g);
    } else if (k == "theorem1") {
      j = theorem1_json(g->g);
    } else {
      fail(ErrorCode::kInvalidArgument, "unknown construction '" + k + "'");
    }
    put(out_json, j.dump(2));
  });
}

pv_status pv_exhaustive(const pv_graph* g, const char* graph_id, char** out_json) {
  return guarded([&] {
    need(g, "graph");
    put(out_json, to_json(exhaustive_1fair_check(g->g, graph_id ? graph_id : "")));
  });
}

void pv_experiment_options_init(pv_experiment_options* o) {
  if (!o) return;
  const ExperimentOptions d;
  o->edge_interpretation = 0;
  o->include_zero = d.include_zero ? 1 : 0;
  o->random_perms = d.random_perms;
  o->threads = d.threads;
  o->max_rounds = d.max_rounds;
}

pv_status pv_experiment(const char* family, const uint32_t* n_list, size_t count, size_t samples, uint64_t seed,
                        const pv_experiment_options* options, const char* format, char** out) {
  return guarded([&] {
    need(family, "family");
    need(n_list, "n list");
    ExperimentOptions opt;
    if (options) {
      opt.interpretation = options->edge_interpretation ? Interpretation::kEdge : Interpretation::kNode;
      opt.include_zero = options->include_zero != 0;
      opt.random_perms = options->random_perms;
      opt.threads = options->threads;
      opt.max_rounds = options->max_rounds;
    }
    const std::string fmt = format ? format : "csv";
    if (fmt != "csv" && fmt != "json") fail(ErrorCode::kInvalidArgument, "format must be csv or json");
    const auto table =
        convergence_experiment(std::vector<Vertex>(n_list, n_list + count), parse_perm_family(family), samples, seed, opt);
    put(out, fmt == "csv" ? to_csv(table) : to_json(table));
  });
}

pv_status pv_reference_rounds(const char* family, uint32_t n, double* out) {
  return guarded([&] {
    need(family, "family");
    need(out, "result");
    const auto v = reference_rounds(parse_perm_family(family), n);
    if (!v) fail(ErrorCode::kNotFound, "no published value for " + std::string(family) + " at n=" + std::to_string(n));
    *out = *v;
  });
}

pv_status pv_fairness_profile(pv_scheduler* s, size_t steps, uint64_t seed, const char* x0, char** out_json) {
  return guarded([&] {
    need(s, "scheduler");
    std::optional<Configuration> start;
    if (x0) start = config_for(s->s->graph(), x0);
    const FairnessProfile p = fairness_profile(*s->s, steps, seed, start);
    json j{{"steps", p.steps}, {"gaps", p.gaps}, {"b", p.b},     {"q50", p.q50},
           {"q90", p.q90},     {"q95", p.q95},   {"q99", p.q99}, {"under_scheduled", p.under_scheduled}};
    put(out_json, j.dump(2));
  });
}

pv_status pv_strategy_create(const pv_graph* g, const char* name, const pv_scheduler* hint, pv_strategy** out) {
  return guarded([&] {
    need(g, "graph");
    need(name, "strategy name");
    need(out, "output pointer");
    const Graph& gr = g->g;
    std::string k = name;
    if (k == "auto") {
      if (is_star(gr)) {
        k = "star";
      } else if (is_path(gr) && gr.vertex_count() % 2 == 1 && gr.vertex_count() >= 7) {
        k = "line";
      } else if (is_tree(gr)) {
        k = "tree";
      } else {
        k = "random-graph";
      }
    }
    const std::vector<Vertex> order = period_hint(gr, hint);
    StrategyPtr st;
    if (k == "star") {
      st = star_luck_strategy(gr, order);
    } else if (k == "tree") {
      st = tree_luck_strategy(gr, order);
    } else if (k == "line") {
      st = line_luck_strategy(gr);
    } else if (k == "matching") {
      const auto m = perfect_matching(gr);
      if (!m) fail(ErrorCode::kNotFound, "graph has no perfect matching");
      st = matching_luck_strategy(*m);
    } else if (k == "random-graph") {
      st = random_graph_luck_strategy(gr);
      if (!st) fail(ErrorCode::kNotFound, "no perfect matching or L7 partition found");
    } else {
      fail(ErrorCode::kInvalidArgument, "unknown strategy '" + k + "'");
    }
    *out = new pv_strategy{std::move(st)};
  });
}

void pv_strategy_free(pv_strategy* st) { delete st; }

pv_status pv_strategy_describe(const pv_strategy* st, char** out) {
  return guarded([&] {
    need(st, "strategy");
    put(out, st->st->describe());
  });
}

pv_status pv_game_play(const pv_graph* g, pv_scheduler* s, const pv_strategy* st, const char* x0, size_t max_rounds,
                       unsigned b, pv_game_result* out) {
  return guarded([&] {
    need(g, "graph");
    need(s, "scheduler");
    need(st, "strategy");
    need(out, "result");
    const auto r = play_game(g->g, *s->s, *st->st, config_for(g->g, x0), max_rounds,
                             b ? std::optional<unsigned>(b) : std::nullopt);
    *out = {r.won ? 1 : 0, r.rounds_used, r.steps, r.round_length};
  });
}

pv_status pv_game_solve(const pv_graph* g, const pv_scheduler* s, const char* x0, size_t horizon_rounds, unsigned b,
                        char** out_json) {
  return guarded([&] {
    need(g, "graph");
    need(s, "scheduler");
    const auto sol = solve_luck_game(g->g, *s->s, config_for(g->g, x0), horizon_rounds,
                                     b ? std::optional<unsigned>(b) : std::nullopt);
    put(out_json, witness_json(sol));
  });
}

}  // extern "C"
