// Command-line front end. Talks to the library only through pavlov.h.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pavlov/pavlov.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNotStabilized = 2;

struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(pv_status s, const std::string& context) {
  if (s != PV_OK) throw CliError(context + ": " + pv_last_error() + " (" + pv_status_name(s) + ")");
}

std::string take(char* s) {
  std::string out = s ? s : "";
  pv_string_free(s);
  return out;
}

struct GraphDeleter {
  void operator()(pv_graph* g) const { pv_graph_free(g); }
};
struct SchedulerDeleter {
  void operator()(pv_scheduler* s) const { pv_scheduler_free(s); }
};
struct StrategyDeleter {
  void operator()(pv_strategy* s) const { pv_strategy_free(s); }
};
using GraphHandle = std::unique_ptr<pv_graph, GraphDeleter>;
using SchedulerHandle = std::unique_ptr<pv_scheduler, SchedulerDeleter>;
using StrategyHandle = std::unique_ptr<pv_strategy, StrategyDeleter>;

struct RunConfig {
  std::string command;
  std::string family;
  std::uint32_t n = 0;
  std::string file;
  double gnp_p = -1;
  std::optional<std::uint64_t> seed;
  std::string scheduler;
  std::string x0;
  std::string trials = "1";
  std::size_t max_steps = 0;
  std::size_t max_rounds = 0;
  unsigned threads = 1;
  std::string out;
  std::string format = "text";
  // analyze / construct / verify
  std::string perm;
  bool construct = false;
  bool exhaustive = false;
  std::string kind;
  std::string check = "constructions";
  std::size_t steps = 0;
  // experiment
  std::string families = "id";
  std::string n_list;
  std::size_t samples = 1000;
  bool compare_paper = false;
  bool edge_interpretation = false;
  bool include_zero = false;
  std::size_t random_perms = 10;
  // game
  std::string strategy = "auto";
  bool solve = false;
  std::string witness;
  unsigned b = 0;
  std::size_t horizon = 0;
  std::size_t dump_schedule = 0;
  bool trajectory = false;

  std::uint64_t effective_seed() const { return seed.value_or(1); }

  json echo() const {
    json j{{"command", command}};
    if (!family.empty()) j["family"] = family;
    if (!file.empty()) j["file"] = file;
    if (gnp_p >= 0) j["gnp_p"] = gnp_p;
    if (n) j["n"] = n;
    if (!scheduler.empty()) j["scheduler"] = scheduler;
    if (!x0.empty()) j["x0"] = x0;
    if (command == "simulate" || command == "game") j["trials"] = trials;
    if (command == "game") j["strategy"] = strategy;
    if (command == "experiment") {
      j["families"] = families;
      j["n_list"] = n_list;
      j["samples"] = samples;
      j["interpretation"] = edge_interpretation ? "edge" : "node";
      j["include_zero"] = include_zero;
    }
    if (!kind.empty()) j["kind"] = kind;
    if (!perm.empty()) j["perm"] = perm;
    if (construct) j["construct"] = true;
    if (exhaustive) j["exhaustive"] = true;
    if (solve) j["solve"] = true;
    if (command == "verify") j["check"] = check;
    return j;
  }
};

std::optional<std::uint64_t> seed_from_env() {
  const char* env = std::getenv("PAVLOV_SEED");
  if (!env || !*env) return std::nullopt;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(env, &used);
    if (used != std::strlen(env)) throw std::invalid_argument(env);
    return v;
  } catch (const std::logic_error&) {
    throw CliError(std::string("PAVLOV_SEED is not an unsigned integer: '") + env + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, sep))
    if (!tok.empty()) out.push_back(tok);
  return out;
}

GraphHandle load_graph(const RunConfig& c) {
  const int sources = static_cast<int>(!c.family.empty()) + static_cast<int>(!c.file.empty()) +
                      static_cast<int>(c.gnp_p >= 0);
  if (sources != 1) throw CliError("give exactly one graph source: --family, --file or --gnp");
  pv_graph* g = nullptr;
  if (!c.family.empty()) {
    check(pv_graph_generate(c.family.c_str(), c.n, &g), "graph");
  } else if (!c.file.empty()) {
    check(pv_graph_load(c.file.c_str(), &g), c.file);
  } else {
    check(pv_graph_gnp(c.n, c.gnp_p, c.effective_seed(), &g), "graph");
  }
  return GraphHandle(g);
}

SchedulerHandle make_scheduler(const pv_graph* g, const std::string& spec, std::uint64_t seed) {
  pv_scheduler* s = nullptr;
  check(pv_scheduler_create(g, spec.c_str(), seed, &s), "scheduler '" + spec + "'");
  return SchedulerHandle(s);
}

std::string random_config(std::uint32_t n, std::mt19937_64& rng) {
  std::string x(n, '0');
  for (auto& ch : x) ch = (rng() >> 63) ? '1' : '0';
  return x;
}

std::string normalize_x0(const std::string& x) { return x.rfind("0b", 0) == 0 ? x.substr(2) : x; }

/// Writes text to --out or standard output, prefixed by the audit header
/// for text and CSV output.
class Output {
 public:
  explicit Output(const RunConfig& c) : c_(c) {}

  void emit_json(json result) const {
    json doc{{"version", pv_version()}, {"seed", c_.effective_seed()}, {"config", c_.echo()}, {"result", std::move(result)}};
    write(doc.dump(2) + "\n");
  }
  void emit_text(const std::string& body) const { write(header() + body); }
  void emit_csv(const std::string& body) const { write(header() + body); }

 private:
  std::string header() const {
    return "# pavlov " + std::string(pv_version()) + " seed=" + std::to_string(c_.effective_seed()) +
           " config=" + c_.echo().dump() + "\n";
  }
  void write(const std::string& s) const {
    if (c_.out.empty()) {
      std::cout << s;
      return;
    }
    std::ofstream f(c_.out);
    if (!f) throw CliError("cannot write '" + c_.out + "'");
    f << s;
  }

  const RunConfig& c_;
};

// ---- subcommands ----

int cmd_simulate(const RunConfig& c) {
  auto g = load_graph(c);
  const std::uint32_t n = pv_graph_vertex_count(g.get());
  const std::string spec = c.scheduler.empty() ? "random-edge" : c.scheduler;
  Output out(c);
  const bool many = c.trials != "1";
  if (many) {
    std::size_t trials = 0;
    try {
      trials = std::stoul(c.trials);
    } catch (const std::logic_error&) {
      throw CliError("--trials must be a positive integer for simulate");
    }
    const std::size_t rounds = c.max_rounds ? c.max_rounds : pv_default_max_steps(n) / std::max<std::uint32_t>(n, 1) + 1;
    pv_estimate_result e{};
    const std::string x0 = normalize_x0(c.x0);
    check(pv_estimate(g.get(), spec.c_str(), c.x0.empty() ? nullptr : x0.c_str(), trials, rounds, c.effective_seed(),
                      c.threads, &e),
          "estimate");
    if (c.format == "json") {
      out.emit_json({{"trials", e.trials},
                     {"successes", e.successes},
                     {"p_hat", e.p_hat},
                     {"stderr", e.stderr_p},
                     {"mean_steps", e.mean_steps},
                     {"max_rounds", rounds}});
    } else {
      std::ostringstream s;
      s << std::fixed << std::setprecision(4) << "trials " << e.trials << "\nsuccesses " << e.successes << "\np_hat "
        << e.p_hat << "\nstderr " << e.stderr_p << "\nmean_steps " << e.mean_steps << "\n";
      out.emit_text(s.str());
    }
    return e.successes == e.trials ? kExitOk : kExitNotStabilized;
  }

  std::mt19937_64 rng(c.effective_seed());
  const std::string x0 = c.x0.empty() ? random_config(n, rng) : normalize_x0(c.x0);
  auto s = make_scheduler(g.get(), spec, c.effective_seed());
  std::string dump;
  if (c.dump_schedule) {
    char* d = nullptr;
    check(pv_scheduler_dump(s.get(), x0.c_str(), c.dump_schedule, &d), "dump");
    dump = take(d);
  }
  const std::size_t max_steps = c.max_steps ? c.max_steps : pv_default_max_steps(n);
  pv_run_result r{};
  char* final_config = nullptr;
  char* traj = nullptr;
  check(pv_simulate(g.get(), s.get(), x0.c_str(), max_steps, &r, &final_config, c.trajectory ? &traj : nullptr),
        "simulate");
  const std::string fin = take(final_config);
  if (c.format == "json") {
    json j{{"x0", x0}, {"final", fin}, {"steps", r.steps}, {"stabilized", r.reached_zero != 0}, {"max_steps", max_steps}};
    if (c.trajectory) j["trajectory"] = json::parse(take(traj));
    if (!dump.empty()) j["schedule"] = dump;
    out.emit_json(j);
  } else {
    std::ostringstream t;
    t << "x0 " << x0 << "\nfinal " << fin << "\nsteps " << r.steps << "\nstabilized "
      << (r.reached_zero ? "yes" : "no") << "\n";
    if (c.trajectory) t << "trajectory " << take(traj) << "\n";
    if (!dump.empty()) t << "schedule\n" << dump;
    out.emit_text(t.str());
  }
  return r.reached_zero ? kExitOk : kExitNotStabilized;
}

int cmd_analyze(const RunConfig& c) {
  auto g = load_graph(c);
  Output out(c);
  char* a = nullptr;
  check(pv_analyze(g.get(), c.perm.empty() ? nullptr : c.perm.c_str(), c.construct ? 1 : 0, &a), "analyze");
  json result = json::parse(take(a));
  if (c.exhaustive) {
    char* e = nullptr;
    const std::string id = !c.family.empty() ? c.family + std::to_string(c.n) : c.file;
    check(pv_exhaustive(g.get(), id.c_str(), &e), "exhaustive");
    result["exhaustive"] = json::parse(take(e));
  }
  if (c.format == "json") {
    out.emit_json(result);
    return kExitOk;
  }
  std::ostringstream t;
  t << "n " << result["n"] << "\nm " << result["m"] << "\nclass "
    << (result["class"].is_null() ? std::string("n/a") : result["class"].get<std::string>()) << "\n";
  if (result.contains("nilpotent"))
    t << "nilpotent " << (result["nilpotent"].get<bool>() ? "yes" : "no") << "\ntrace_parity " << result["trace_parity"]
      << "\n";
  if (result.contains("s2_parity")) t << "s2_parity " << result["s2_parity"] << "\n";
  if (result.contains("construction")) {
    const auto& k = result["construction"];
    t << "constructed_order " << k["schedule"].dump() << "\nconstructed_nilpotent "
      << (k["nilpotent"].get<bool>() ? "yes" : "no") << "\nconstructed_method " << k["method"].get<std::string>()
      << "\nconstructed_valid " << (k["valid"].get<bool>() ? "yes" : "no") << "\n";
  }
  if (result.contains("exhaustive")) {
    const auto& e = result["exhaustive"];
    t << "permutations_tested " << e["permutations_tested"] << "\nstabilizing " << e["stabilizing"]
      << "\nall_nilpotent " << (e["all_stabilize"].get<bool>() ? "yes" : "no") << "\n";
    for (const auto& note : e["notes"]) t << "note " << note.get<std::string>() << "\n";
  }
  out.emit_text(t.str());
  return kExitOk;
}

int cmd_construct(const RunConfig& c) {
  auto g = load_graph(c);
  Output out(c);
  if (c.kind.empty()) throw CliError("construct needs --kind");
  char* j = nullptr;
  check(pv_construct(g.get(), c.kind.c_str(), &j), "construct");
  json result = json::parse(take(j));
  if (c.format == "json") {
    out.emit_json(result);
  } else {
    std::ostringstream t;
    for (auto it = result.begin(); it != result.end(); ++it)
      t << it.key() << ' ' << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
    out.emit_text(t.str());
  }
  return result.value("valid", false) ? kExitOk : kExitNotStabilized;
}

int cmd_experiment(const RunConfig& c) {
  Output out(c);
  std::vector<std::uint32_t> ns;
  for (const auto& tok : split(c.n_list.empty() ? "4,8,16" : c.n_list, ',')) {
    try {
      ns.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
    } catch (const std::logic_error&) {
      throw CliError("bad --n entry '" + tok + "'");
    }
  }
  pv_experiment_options opt;
  pv_experiment_options_init(&opt);
  opt.edge_interpretation = c.edge_interpretation ? 1 : 0;
  opt.include_zero = c.include_zero ? 1 : 0;
  opt.random_perms = c.random_perms;
  opt.threads = c.threads;
  opt.max_rounds = c.max_rounds;

  json rows = json::array();
  for (const auto& fam : split(c.families, ',')) {
    char* j = nullptr;
    check(pv_experiment(fam.c_str(), ns.data(), ns.size(), c.samples, c.effective_seed(), &opt, "json", &j),
          "experiment " + fam);
    json table = json::parse(take(j));
    for (auto& row : table["rows"]) {
      if (c.compare_paper) {
        double ref = 0;
        if (pv_reference_rounds(fam.c_str(), row["n"].get<std::uint32_t>(), &ref) == PV_OK) {
          row["published"] = ref;
          row["rel_dev"] = (row["mean_rounds"].get<double>() - ref) / ref;
        } else {
          row["published"] = nullptr;
          row["rel_dev"] = nullptr;
        }
      }
      rows.push_back(row);
    }
  }
  if (c.format == "json") {
    out.emit_json({{"rows", rows}});
    return kExitOk;
  }
  std::ostringstream t;
  const char sep = c.format == "csv" ? ',' : ' ';
  t << std::fixed << std::setprecision(4);
  t << "family" << sep << "n" << sep << "samples" << sep << "mean_rounds" << sep << "stderr" << sep << "seed";
  if (c.compare_paper) t << sep << "published" << sep << "rel_dev";
  t << "\n";
  for (const auto& r : rows) {
    t << r["family"].get<std::string>() << sep << r["n"].get<std::uint32_t>() << sep << r["samples"].get<std::size_t>()
      << sep << r["mean_rounds"].get<double>() << sep << r["stderr"].get<double>() << sep
      << r["seed"].get<std::uint64_t>();
    if (c.compare_paper) {
      if (r["published"].is_null()) {
        t << sep << "NA" << sep << "NA";
      } else {
        t << sep << r["published"].get<double>() << sep << r["rel_dev"].get<double>();
      }
    }
    t << "\n";
  }
  if (c.format == "csv") {
    out.emit_csv(t.str());
  } else {
    out.emit_text(t.str());
  }
  return kExitOk;
}

int cmd_game(const RunConfig& c) {
  auto g = load_graph(c);
  Output out(c);
  const std::uint32_t n = pv_graph_vertex_count(g.get());
  const std::string spec = c.scheduler.empty() ? "periodic-node:id" : c.scheduler;
  auto sched = make_scheduler(g.get(), spec, c.effective_seed());

  if (c.solve) {
    const std::string x0 = c.x0.empty() ? std::string(n, '1') : normalize_x0(c.x0);
    const std::size_t horizon = c.horizon ? c.horizon : std::size_t{1} << std::min<std::uint32_t>(n, 10);
    char* j = nullptr;
    check(pv_game_solve(g.get(), sched.get(), x0.c_str(), horizon, c.b, &j), "solve");
    json sol = json::parse(take(j));
    if (!c.witness.empty()) {
      std::ofstream w(c.witness);
      if (!w) throw CliError("cannot write '" + c.witness + "'");
      w << sol.dump(2) << "\n";
    }
    const bool wins = sol["luck_wins"].get<bool>();
    if (c.format == "json") {
      out.emit_json({{"x0", x0}, {"horizon_rounds", horizon}, {"solution", sol}});
    } else {
      std::ostringstream t;
      t << "x0 " << x0 << "\nhorizon_rounds " << horizon << "\nluck " << (wins ? "wins" : "loses")
        << "\nstates_explored " << sol["states_explored"] << "\nstate_space_closed "
        << (sol["state_space_closed"].get<bool>() ? "yes" : "no") << "\n";
      if (wins) t << "steps_to_zero " << sol["steps_to_zero"] << "\n";
      out.emit_text(t.str());
    }
    return wins ? kExitOk : kExitNotStabilized;
  }

  pv_strategy* raw = nullptr;
  check(pv_strategy_create(g.get(), c.strategy.c_str(), sched.get(), &raw), "strategy '" + c.strategy + "'");
  StrategyHandle st(raw);
  char* d = nullptr;
  check(pv_strategy_describe(st.get(), &d), "strategy");
  const std::string described = take(d);
  const std::size_t max_rounds = c.max_rounds ? c.max_rounds : 64;

  std::vector<std::string> starts;
  if (c.trials == "all") {
    if (n > 20) throw CliError("--trials all is limited to n <= 20");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      std::string x(n, '0');
      for (std::uint32_t v = 0; v < n; ++v)
        if ((mask >> v) & 1U) x[v] = '1';
      starts.push_back(x);
    }
  } else if (!c.x0.empty()) {
    starts.push_back(normalize_x0(c.x0));
  } else {
    std::size_t trials = 0;
    try {
      trials = std::stoul(c.trials);
    } catch (const std::logic_error&) {
      throw CliError("--trials must be a positive integer or 'all'");
    }
    std::mt19937_64 rng(c.effective_seed());
    for (std::size_t i = 0; i < trials; ++i) starts.push_back(random_config(n, rng));
  }

  std::size_t won = 0, worst_rounds = 0;
  std::vector<std::string> lost;
  for (const auto& x : starts) {
    auto s = make_scheduler(g.get(), spec, c.effective_seed());
    pv_game_result r{};
    check(pv_game_play(g.get(), s.get(), st.get(), x.c_str(), max_rounds, c.b, &r), "game");
    if (r.won) {
      ++won;
      worst_rounds = std::max(worst_rounds, r.rounds_used);
    } else if (lost.size() < 16) {
      lost.push_back(x);
    }
  }
  const bool all = won == starts.size();
  if (c.format == "json") {
    out.emit_json({{"strategy", described},
                   {"starts", starts.size()},
                   {"won", won},
                   {"all_won", all},
                   {"max_rounds_used", worst_rounds},
                   {"lost_examples", lost}});
  } else {
    std::ostringstream t;
    t << "strategy " << described << "\nstarts " << starts.size() << "\nwon " << won << "\nverdict "
      << (all ? "won" : "lost") << "\nmax_rounds_used " << worst_rounds << "\n";
    for (const auto& x : lost) t << "lost_from " << x << "\n";
    out.emit_text(t.str());
  }
  return all ? kExitOk : kExitNotStabilized;
}

int cmd_verify(const RunConfig& c) {
  auto g = load_graph(c);
  Output out(c);
  json result;
  bool ok = true;
  if (c.check == "exhaustive") {
    char* e = nullptr;
    const std::string id = !c.family.empty() ? c.family + std::to_string(c.n) : c.file;
    check(pv_exhaustive(g.get(), id.c_str(), &e), "exhaustive");
    result = json::parse(take(e));
  } else if (c.check == "fairness") {
    const std::string spec = c.scheduler.empty() ? "random-node" : c.scheduler;
    auto s = make_scheduler(g.get(), spec, c.effective_seed());
    const std::uint32_t n = pv_graph_vertex_count(g.get());
    const std::size_t steps = c.steps ? c.steps : 100 * std::max<std::uint32_t>(n, 1);
    const std::string x0 = normalize_x0(c.x0);
    char* j = nullptr;
    check(pv_fairness_profile(s.get(), steps, c.effective_seed(), c.x0.empty() ? nullptr : x0.c_str(), &j),
          "fairness");
    result = json::parse(take(j));
  } else if (c.check == "constructions") {
    result = json::object();
    for (const char* kind : {"theorem1", "two-fair", "one-fair", "star-3fair", "k3-adaptive"}) {
      char* j = nullptr;
      const pv_status s = pv_construct(g.get(), kind, &j);
      if (s == PV_OK) {
        const json k = json::parse(take(j));
        result[kind] = {{"valid", k.value("valid", false)}};
        ok = ok && k.value("valid", false);
      } else {
        result[kind] = {{"skipped", pv_last_error()}};
      }
    }
  } else {
    throw CliError("unknown --check '" + c.check + "' (exhaustive, fairness, constructions)");
  }
  if (c.format == "json") {
    out.emit_json(result);
  } else {
    std::ostringstream t;
    for (auto it = result.begin(); it != result.end(); ++it)
      t << it.key() << ' ' << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
    out.emit_text(t.str());
  }
  return ok ? kExitOk : kExitNotStabilized;
}

void add_graph_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--family", c.family, "line, cycle, star, complete, k3, k4, k3-merge");
  sub->add_option("--n", c.n, "family size (leaf count for star) or G(n,p) size");
  sub->add_option("--file", c.file, "graph file: 'n m' then m lines 'u v'");
  sub->add_option("--gnp", c.gnp_p, "sample G(n,p) with this p");
}

void add_common_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--seed", c.seed, "master seed (falls back to PAVLOV_SEED, then 1)");
  sub->add_option("--out", c.out, "write output to this file");
  sub->add_option("--format", c.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig c;
  CLI::App app{"Pavlov dynamics on graphs under adversarial schedulers"};
  app.set_version_flag("--version", std::string(pv_version()));
  app.require_subcommand(1);

  auto* sim = app.add_subcommand("simulate", "run the dynamics under a scheduler");
  add_graph_options(sim, c);
  add_common_options(sim, c);
  sim->add_option("--scheduler", c.scheduler, "scheduler spec (default random-edge)");
  sim->add_option("--x0", c.x0, "initial configuration, e.g. 0b0110 (default uniform random)");
  sim->add_option("--trials", c.trials, "number of independent trials");
  sim->add_option("--max-steps", c.max_steps, "step budget for a single run");
  sim->add_option("--max-rounds", c.max_rounds, "round budget per trial");
  sim->add_option("--threads", c.threads, "worker threads for trials");
  sim->add_option("--dump-schedule", c.dump_schedule, "also print the first N scheduling decisions");
  sim->add_flag("--trajectory", c.trajectory, "record every step");

  auto* ana = app.add_subcommand("analyze", "classify the graph and test schedule nilpotency");
  add_graph_options(ana, c);
  add_common_options(ana, c);
  ana->add_option("--perm", c.perm, "edge order as comma-separated indices");
  ana->add_flag("--construct", c.construct, "build a non-nilpotent 1-fair edge order");
  ana->add_flag("--exhaustive", c.exhaustive, "test every edge permutation");

  auto* con = app.add_subcommand("construct", "build and validate an adversarial schedule");
  add_graph_options(con, c);
  add_common_options(con, c);
  con->add_option("--kind", c.kind, "two-fair, one-fair, star-3fair, k3-adaptive, theorem1")->required();

  auto* exp = app.add_subcommand("experiment", "mean rounds to 0 on C_n under 1-fair node permutations");
  add_common_options(exp, c);
  exp->add_option("--families", c.families, "comma-separated: id, p3, pattern13, random");
  exp->add_option("--n", c.n_list, "comma-separated cycle sizes");
  exp->add_option("--samples", c.samples, "samples per point");
  exp->add_option("--threads", c.threads, "worker threads");
  exp->add_option("--max-rounds", c.max_rounds, "round budget per sample");
  exp->add_option("--random-perms", c.random_perms, "permutations for the random family");
  exp->add_flag("--compare-paper", c.compare_paper, "add published values and relative deviation");
  exp->add_flag("--edge-interpretation", c.edge_interpretation, "permute edges instead of nodes");
  exp->add_flag("--include-zero", c.include_zero, "allow the all-zero start");

  auto* game = app.add_subcommand("game", "play or solve the scheduler-luck game");
  add_graph_options(game, c);
  add_common_options(game, c);
  game->add_option("--scheduler", c.scheduler, "node scheduler spec (default periodic-node:id)");
  game->add_option("--strategy", c.strategy, "star, tree, matching, line, random-graph, auto");
  game->add_option("--x0", c.x0, "initial configuration");
  game->add_option("--trials", c.trials, "number of random starts, or 'all'");
  game->add_option("--max-rounds", c.max_rounds, "round budget (default 64)");
  game->add_option("--b", c.b, "fairness bound for the round length (default: declared)");
  game->add_flag("--solve", c.solve, "decide the game by exhaustive search");
  game->add_option("--horizon", c.horizon, "search horizon in rounds");
  game->add_option("--witness", c.witness, "write the solver's witness tree as JSON");

  auto* ver = app.add_subcommand("verify", "run a verification on the graph");
  add_graph_options(ver, c);
  add_common_options(ver, c);
  ver->add_option("--check", c.check, "constructions, exhaustive or fairness");
  ver->add_option("--scheduler", c.scheduler, "scheduler spec for the fairness check");
  ver->add_option("--steps", c.steps, "steps for the fairness check");
  ver->add_option("--x0", c.x0, "start for the fairness check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitError;
  }

  try {
    if (!c.seed) c.seed = seed_from_env();
    for (auto* sub : app.get_subcommands()) c.command = sub->get_name();
    if (c.command == "simulate") return cmd_simulate(c);
    if (c.command == "analyze") return cmd_analyze(c);
    if (c.command == "construct") return cmd_construct(c);
    if (c.command == "experiment") return cmd_experiment(c);
    if (c.command == "game") return cmd_game(c);
    if (c.command == "verify") return cmd_verify(c);
  } catch (const CliError& e) {
    std::cerr << "pavlov: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "pavlov: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
