// Acceptance gate: one PASS/FAIL line per criterion. Pass criterion numbers
// as arguments to run a subset.
#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "oracles.hpp"
#include "pavlov/gf2.hpp"
#include "pavlov/rng.hpp"
#include "pavlov/schedulers.hpp"
#include "pavlov/strategies.hpp"
#include "pavlov/verify.hpp"

using namespace pavlov;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

unsigned worker_count() { return std::max(1U, std::thread::hardware_concurrency()); }

/// Runs body(i) for i in [0, count) on all cores.
void parallel(std::size_t count, const std::function<void(std::size_t)>& body) {
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < worker_count(); ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) body(i);
    });
  for (auto& th : pool) th.join();
}

oracle::Mat oracle_schedule_product(const Graph& g, const std::vector<EdgeId>& order, bool mod2) {
  auto m = oracle::identity(g.vertex_count());
  for (EdgeId e : order) m = oracle::mul(m, oracle::update(g.vertex_count(), g.edge(e).u, g.edge(e).v), mod2);
  return m;
}

std::vector<Vertex> identity_perm(Vertex n) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

/// All permutations of 0..n-1 in lexicographic order.
std::vector<std::vector<Vertex>> all_perms(Vertex n) {
  std::vector<std::vector<Vertex>> out;
  auto p = identity_perm(n);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// -- 1 ------------------------------------------------------------------------------

Outcome criterion1() {
  std::size_t graphs = 0, perms = 0, disagreements = 0, oracle_disagreements = 0;
  for (std::size_t m = 2; m <= 5; ++m) {
    const auto family = oracle::connected_graphs_with_edges(m);
    graphs += family.size();
    for (const auto& [n, edges] : family) {
      const Graph g = oracle::to_graph(n, edges);
      std::vector<EdgeId> order(m);
      std::iota(order.begin(), order.end(), 0);
      do {
        ++perms;
        const bool nil = is_nilpotent(schedule_matrix(g, order));
        bool all = true, oracle_all = true;
        std::vector<oracle::Pair> period;
        for (EdgeId e : order) period.emplace_back(g.edge(e).u, g.edge(e).v);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
          all = all && periodic_outcome(g, Configuration::from_mask(n, mask), order).stabilizes;
          oracle_all = oracle_all && oracle::periodic_reaches_zero(period, oracle::labels_of(mask, n));
        }
        disagreements += nil != all;
        oracle_disagreements += (nil != oracle_all) + (nil != oracle::nilpotent_mod2(oracle_schedule_product(g, order, true)));
      } while (std::next_permutation(order.begin(), order.end()));
    }
  }
  std::ostringstream d;
  d << graphs << " connected graphs with 2<=m<=5, " << perms << " edge orders, " << disagreements
    << " disagreements (" << oracle_disagreements << " against the reference simulation)";
  return {graphs > 0 && disagreements == 0 && oracle_disagreements == 0, d.str()};
}

// -- 2 ------------------------------------------------------------------------------

struct Named {
  std::string name;
  Graph g;
};

std::vector<Named> two_fair_corpus() {
  std::vector<Named> out;
  for (std::uint32_t n = 3; n <= 7; ++n) {
    int k = 0;
    for (const auto& edges : oracle::trees(n)) out.push_back({"T" + std::to_string(n) + "." + std::to_string(k++), oracle::to_graph(n, edges)});
  }
  for (Vertex n = 4; n <= 8; ++n) out.push_back({"C" + std::to_string(n), generate(Family::kCycle, n)});
  out.push_back({"K4", generate(Family::kK4)});
  out.push_back({"K3-merge", generate(Family::kK3Merge)});
  int found = 0;
  for (std::uint64_t s = 0; found < 20; ++s) {
    const Vertex n = 5 + static_cast<Vertex>(s % 4);
    const Graph g = sample_gnp(n, 0.4, derive_seed(2024, s));
    if (!is_connected(g) || g.edge_count() < 2) continue;
    out.push_back({"G(" + std::to_string(n) + ",0.4)#" + std::to_string(s), g});
    ++found;
  }
  return out;
}

Outcome criterion2() {
  const auto corpus = two_fair_corpus();
  std::size_t ok = 0;
  std::string first_bad;
  for (const auto& [name, g] : corpus) {
    const auto walk = construct_2fair_enumeration(g);
    std::vector<int> count(g.edge_count(), 0);
    for (EdgeId e : walk) ++count[e];
    bool good = std::all_of(count.begin(), count.end(), [](int c) { return c == 1 || c == 2; });
    for (std::size_t i = 0; i < walk.size() && good; ++i) {
      const Edge a = g.edge(walk[i]), b = g.edge(walk[(i + 1) % walk.size()]);
      good = (a.u == b.u) + (a.u == b.v) + (a.v == b.u) + (a.v == b.v) == 1;
    }
    // a start whose periodic trajectory never reaches 0, found by the
    // library and confirmed by the reference simulation
    const Vertex n = g.vertex_count();
    std::vector<oracle::Pair> period;
    for (EdgeId e : walk) period.emplace_back(g.edge(e).u, g.edge(e).v);
    bool witness = false;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n) && !witness; ++mask)
      witness = !periodic_outcome(g, Configuration::from_mask(n, mask), walk).stabilizes &&
                !oracle::periodic_reaches_zero(period, oracle::labels_of(mask, n));
    good = good && witness;
    ok += good;
    if (!good && first_bad.empty()) first_bad = name;
  }
  std::ostringstream d;
  d << ok << "/" << corpus.size() << " graphs (trees n<=7, C4..C8, K4, K3-merge, 20 G(n<=8,0.4)) have a valid 2-fair"
    << " walk with a non-stabilizing start";
  if (!first_bad.empty()) d << "; first failure " << first_bad;
  return {corpus.size() >= 50 && ok == corpus.size(), d.str()};
}

// -- 3 ------------------------------------------------------------------------------

Outcome criterion3() {
  std::vector<std::pair<Named, OneFairClass>> cases;
  const auto add = [&](std::string name, Graph g, OneFairClass c) { cases.push_back({{std::move(name), std::move(g)}, c}); };
  add("C4", generate(Family::kCycle, 4), OneFairClass::kG1);
  add("C5", generate(Family::kCycle, 5), OneFairClass::kG1);
  add("K4", generate(Family::kK4), OneFairClass::kG1);
  add("K3-merge", generate(Family::kK3Merge), OneFairClass::kG1);
  int random_g1 = 0;
  for (std::uint64_t s = 0; random_g1 < 8; ++s) {
    const Graph g = sample_gnp(7, 0.45, derive_seed(77, s));
    if (!is_connected(g) || !has_long_cycle(g)) continue;
    add("G(7,0.45)#" + std::to_string(s), g, OneFairClass::kG1);
    ++random_g1;
  }
  add("L3", generate(Family::kLine, 3), OneFairClass::kG2);
  add("L5", generate(Family::kLine, 5), OneFairClass::kG2);
  add("L7", generate(Family::kLine, 7), OneFairClass::kG2);
  add("K1,4", generate(Family::kStar, 4), OneFairClass::kG2);
  add("K1,6", generate(Family::kStar, 6), OneFairClass::kG2);
  add("K3+pendant", Graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}), OneFairClass::kG2);
  add("bowtie", Graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}), OneFairClass::kG2);
  for (std::uint32_t n : {4U, 8U}) {
    int k = 0;
    for (const auto& edges : oracle::trees(n))
      add("T" + std::to_string(n) + "." + std::to_string(k++), oracle::to_graph(n, edges), OneFairClass::kG3);
  }
  // random labeled trees on 12 vertices from Pruefer sequences
  Rng rng(12);
  for (int k = 0; k < 12; ++k) {
    std::vector<Edge> edges;
    std::vector<std::uint32_t> seq(10);
    for (auto& s : seq) s = static_cast<std::uint32_t>(rng.below(12));
    std::vector<int> degree(12, 1);
    for (auto s : seq) ++degree[s];
    for (auto s : seq) {
      std::uint32_t leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      edges.push_back({leaf, s});
      --degree[leaf];
      --degree[s];
    }
    std::vector<std::uint32_t> last;
    for (std::uint32_t v = 0; v < 12; ++v)
      if (degree[v] == 1) last.push_back(v);
    edges.push_back({last[0], last[1]});
    add("T12#" + std::to_string(k), Graph(12, edges), OneFairClass::kG3);
  }

  std::size_t ok = 0;
  std::array<std::size_t, 3> per_class{};
  std::string first_bad;
  for (const auto& [named, expected] : cases) {
    bool good = false;
    try {
      const auto c = construct_1fair_nonnilpotent(named.g);
      good = c.cls == expected && !is_nilpotent(schedule_matrix(named.g, c.order)) &&
             !oracle::nilpotent_mod2(oracle_schedule_product(named.g, c.order, true));
    } catch (const Error&) {
      good = false;
    }
    ok += good;
    if (good) ++per_class[static_cast<int>(expected)];
    if (!good && first_bad.empty()) first_bad = named.name;
  }
  std::ostringstream d;
  d << ok << "/" << cases.size() << " constructed orders are non-nilpotent (G1 " << per_class[0] << ", G2 "
    << per_class[1] << ", G3 " << per_class[2] << ")";
  if (!first_bad.empty()) d << "; first failure " << first_bad;
  return {cases.size() >= 20 && ok == cases.size(), d.str()};
}

// -- 4 ------------------------------------------------------------------------------

Outcome criterion4() {
  const Graph l6 = generate(Family::kLine, 6);
  const auto r = exhaustive_1fair_check(l6, "L6");
  bool nilpotent_all = true, oracle_all = true;
  std::vector<EdgeId> order(5);
  std::iota(order.begin(), order.end(), 0);
  std::size_t count = 0;
  do {
    ++count;
    nilpotent_all = nilpotent_all && oracle::nilpotent_mod2(oracle_schedule_product(l6, order, true));
    std::vector<oracle::Pair> period;
    for (EdgeId e : order) period.emplace_back(l6.edge(e).u, l6.edge(e).v);
    for (Vertex v = 0; v < 6; ++v) oracle_all = oracle_all && oracle::periodic_reaches_zero(period, oracle::labels_of(1U << v, 6));
  } while (std::next_permutation(order.begin(), order.end()));
  const bool note = std::any_of(r.notes.begin(), r.notes.end(),
                                [](const std::string& s) { return s.find("6!") != std::string::npos && s.find("5!") != std::string::npos; });
  std::ostringstream d;
  d << r.permutations_tested << " orders, " << r.stabilizing << " stabilize from every single-one start; reference: "
    << count << " orders, nilpotent " << (nilpotent_all ? "all" : "not all") << ", stabilizing "
    << (oracle_all ? "all" : "not all") << "; count note " << (note ? "present" : "missing");
  return {r.permutations_tested == 120 && r.all_stabilize() && count == 120 && nilpotent_all && oracle_all && note, d.str()};
}

// -- 5 ------------------------------------------------------------------------------

struct GameCase {
  Graph g;
  bool star = false;
};

Outcome criterion5() {
  std::vector<GameCase> cases;
  for (Vertex leaves = 1; leaves <= 4; ++leaves) cases.push_back({generate(Family::kStar, leaves), true});
  for (std::uint32_t n = 2; n <= 7; ++n)
    for (const auto& edges : oracle::trees(n)) cases.push_back({oracle::to_graph(n, edges), false});

  std::atomic<std::size_t> games{0}, losses{0}, worst_rounds{0};
  std::mutex mu;
  std::string first_loss;
  const auto strategy_for = [](const GameCase& c, const std::vector<Vertex>& perm) {
    return c.star ? star_luck_strategy(c.g, perm) : tree_luck_strategy(c.g, perm);
  };
  for (const auto& c : cases) {
    const Vertex n = c.g.vertex_count();
    const auto perms = all_perms(n);
    parallel(perms.size(), [&](std::size_t i) {
      const auto& perm = perms[i];
      const auto st = strategy_for(c, perm);
      auto proto = periodic_scheduler(c.g, DaemonKind::kNode, {perm.begin(), perm.end()}, 0);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        auto s = proto->clone();
        const auto r = play_game(c.g, *s, *st, Configuration::from_mask(n, mask), std::size_t{1} << n);
        ++games;
        if (!r.won) {
          ++losses;
          std::lock_guard<std::mutex> lock(mu);
          if (first_loss.empty()) first_loss = format_graph(c.g) + " x0=" + Configuration::from_mask(n, mask).to_string();
        }
        std::size_t w = worst_rounds.load();
        while (r.rounds_used > w && !worst_rounds.compare_exchange_weak(w, r.rounds_used)) {
        }
      }
    });
  }

  // exact search agrees on a sample drawn across all sizes
  Rng rng(5);
  std::size_t solved = 0, solver_wins = 0;
  for (int k = 0; k < 150; ++k) {
    const auto& c = cases[rng.below(cases.size())];
    const Vertex n = c.g.vertex_count();
    auto perm = identity_perm(n);
    rng.shuffle(perm.begin(), perm.end());
    const auto x0 = Configuration::from_mask(n, rng.below(std::uint64_t{1} << n));
    auto s = periodic_scheduler(c.g, DaemonKind::kNode, {perm.begin(), perm.end()}, 0);
    const auto sol = solve_luck_game(c.g, *s, x0, std::size_t{1} << n);
    ++solved;
    solver_wins += sol.luck_wins;
  }
  std::ostringstream d;
  d << games.load() << " games on " << cases.size() << " stars/trees, " << losses.load()
    << " losses, worst " << worst_rounds.load() << " rounds; solver confirms " << solver_wins << "/" << solved;
  if (!first_loss.empty()) d << "; first loss on " << first_loss;
  return {losses == 0 && solved >= 100 && solver_wins == solved, d.str()};
}

// -- 6 ------------------------------------------------------------------------------

/// Every line of play of `period` on a star from x; false when some line
/// ends away from x.
bool oracle_star_period_returns(Vertex leaves, const std::vector<Vertex>& period, const oracle::Labels& x0,
                                std::size_t& branches) {
  std::function<bool(std::size_t, oracle::Labels)> go = [&](std::size_t i, oracle::Labels x) {
    if (i == period.size()) {
      ++branches;
      return x == x0;
    }
    const Vertex v = period[i];
    if (v != 0) {
      oracle::play(x, v, 0);
      return go(i + 1, x);
    }
    for (Vertex l = 1; l <= leaves; ++l) {
      auto y = x;
      oracle::play(y, 0, l);
      if (!go(i + 1, y)) return false;
    }
    return true;
  };
  return go(0, x0);
}

Outcome criterion6() {
  std::ostringstream d;
  bool pass = true;
  for (Vertex leaves : {5U, 8U}) {
    const Graph star = generate(Family::kStar, leaves);
    const auto sched = star_3fair_schedule(leaves);
    auto s = make_scheduler(star, "star-3fair", 0);
    const auto rep = enumerate_luck_branches(star, *s, sched.x0, sched.period.size() * 3, sched.period.size());

    oracle::Labels x0(leaves + 1);
    for (Vertex v = 0; v <= leaves; ++v) x0[v] = sched.x0.get(v);
    std::size_t oracle_branches = 0;
    const bool oracle_returns = oracle_star_period_returns(leaves, sched.period, x0, oracle_branches);

    std::vector<Vertex> trace;
    for (int k = 0; k < 3; ++k) trace.insert(trace.end(), sched.period.begin(), sched.period.end());
    const auto monitor = fairness_monitor(trace, leaves + 1);
    const bool ok = rep.checkpoints_return && !rep.reached_zero && oracle_returns && monitor.b == 3 &&
                    oracle::fairness_b(trace, leaves + 1) == 3 && rep.worst_b == 3;
    pass = pass && ok;
    d << "K1," << leaves << ": " << rep.branches << " merged branches over 3 periods return to x0="
      << sched.x0.to_string() << (rep.checkpoints_return ? "" : " (NOT)") << ", reference " << oracle_branches
      << " lines " << (oracle_returns ? "return" : "do not return") << ", b=" << monitor.b << "; ";
  }

  const Graph k3 = generate(Family::kComplete, 3);
  auto daemon = k3_adaptive_daemon(k3, 0);
  const auto rep = enumerate_luck_branches(k3, *daemon, Configuration::all_ones(3), 30, 3);
  // any start and any partners close a block at all-ones
  bool blocks_close = true;
  for (Vertex start = 0; start < 3; ++start)
    for (int choice = 0; choice < 8; ++choice) {
      oracle::Labels x{1, 1, 1};
      const Vertex p1 = (start + 1 + (choice & 1)) % 3;
      oracle::play(x, start, p1);
      const Vertex one = static_cast<Vertex>(std::find(x.begin(), x.end(), 1) - x.begin());
      const Vertex p2 = (one + 1 + ((choice >> 1) & 1)) % 3;
      oracle::play(x, one, p2);
      const Vertex zero = static_cast<Vertex>(std::find(x.begin(), x.end(), 0) - x.begin());
      oracle::play(x, zero, (zero + 1 + ((choice >> 2) & 1)) % 3);
      blocks_close = blocks_close && x == oracle::Labels{1, 1, 1};
    }
  // random lines of play through 10 blocks are 2-fair by the definition
  Rng rng(3);
  std::size_t worst = 0;
  for (int t = 0; t < 300; ++t) {
    auto dd = k3_adaptive_daemon(k3, rng.next());
    auto x = Configuration::all_ones(3);
    std::vector<Vertex> trace;
    for (int step = 0; step < 30; ++step) {
      const Vertex v = dd->next(x).node;
      trace.push_back(v);
      x.play(v, dd->random_partner(v));
    }
    worst = std::max(worst, oracle::fairness_b(trace, 3));
  }
  const auto sol = solve_luck_game(k3, *daemon, Configuration::all_ones(3), 1000);
  const bool k3_ok = rep.checkpoints_return && !rep.reached_zero && rep.worst_b <= 2 && rep.all_rescheduled &&
                     blocks_close && worst <= 2 && !sol.luck_wins && sol.state_space_closed;
  d << "K3: " << rep.branches << " branches over 10 blocks " << (rep.checkpoints_return ? "end" : "do NOT end")
    << " every block at 111, worst b=" << rep.worst_b << " (reference " << worst << "), solver: luck "
    << (sol.luck_wins ? "wins" : "cannot win") << (sol.state_space_closed ? " (state space closed)" : "");
  return {pass && k3_ok, d.str()};
}

// -- 7 ------------------------------------------------------------------------------

/// Partner rule of the line strategy on the path 0..n-1, phase by round.
Vertex oracle_line_partner(Vertex i, std::size_t round) {
  if (round == 0) {
    if (i < 4) return i ^ 1U;
    return i == 4 ? 5 : i - 1;
  }
  if (i <= 1) return 1 - i;
  if (i == 2) return 1;
  return i % 2 ? i + 1 : i - 1;
}

Outcome criterion7() {
  std::ostringstream d;
  bool pass = true;

  {
    const Graph l8 = generate(Family::kLine, 8);
    const auto st = matching_luck_strategy(*perfect_matching(l8));
    const auto perms = all_perms(8);
    std::atomic<std::size_t> bad{0}, oracle_bad{0};
    parallel(perms.size(), [&](std::size_t i) {
      auto s = periodic_scheduler(l8, DaemonKind::kNode, {perms[i].begin(), perms[i].end()}, 0);
      if (!oblivious_playout_matrix(l8, *s, *st, 1).is_zero()) ++bad;
      if (i % 7 == 0) {
        for (std::uint64_t mask = 0; mask < 256; ++mask) {
          auto x = oracle::labels_of(mask, 8);
          for (Vertex v : perms[i]) oracle::play(x, v, v ^ 1U);
          if (!oracle::all_zero(x)) ++oracle_bad;
        }
      }
    });
    pass = pass && bad == 0 && oracle_bad == 0;
    d << "L8 matching: " << perms.size() << " orders, " << bad.load() << " nonzero one-round matrices ("
      << oracle_bad.load() << " reference failures); ";
  }

  for (Vertex n : {7U, 9U}) {
    const Graph line = generate(Family::kLine, n);
    const auto st = line_luck_strategy(line);
    const auto perms = all_perms(n);
    std::atomic<std::size_t> bad{0}, oracle_bad{0};
    parallel(perms.size(), [&](std::size_t i) {
      auto s = periodic_scheduler(line, DaemonKind::kNode, {perms[i].begin(), perms[i].end()}, 0);
      if (!oblivious_playout_matrix(line, *s, *st, 2).is_zero()) ++bad;
      if (n == 7 || i % 101 == 0) {
        for (std::uint64_t mask = 0; mask < (1U << n); ++mask) {
          auto x = oracle::labels_of(mask, n);
          for (std::size_t round = 0; round < 2; ++round)
            for (Vertex v : perms[i]) oracle::play(x, v, oracle_line_partner(v, round));
          if (!oracle::all_zero(x)) ++oracle_bad;
        }
      }
    });
    pass = pass && bad == 0 && oracle_bad == 0;
    d << "L" << n << " line: " << perms.size() << " orders, " << bad.load() << " nonzero two-round matrices ("
      << oracle_bad.load() << " reference failures); ";
  }

  const Vertex n = 101;
  const double p = 2.0 * std::log(101.0) / 101.0;
  std::size_t found = 0, wins = 0, all_start_wins = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = sample_gnp(n, p, seed);
    const auto st = random_graph_luck_strategy(g);
    if (!st) continue;
    ++found;
    Rng rng(derive_seed(seed, 1));
    const auto trace = random_bfair_trace(n, 2, 2 * (2 * (n - 1) + 1), rng);
    const auto x0 = [&] {
      Configuration x(n);
      for (Vertex v = 0; v < n; ++v) x.set(v, rng.coin());
      return x;
    }();
    auto s = sequence_scheduler(g, DaemonKind::kNode, {trace.begin(), trace.end()}, 0, 2U);
    auto s2 = s->clone();
    wins += play_game(g, *s, *st, x0, 2).won;
    all_start_wins += oblivious_playout_matrix(g, *s2, *st, 2).is_zero();
  }
  pass = pass && wins >= 90;
  d << "G(101, 2ln101/101): strategy found in " << found << "/100 seeds, 2-round win from a random start in " << wins
    << " (from every start in " << all_start_wins << ")";
  return {pass, d.str()};
}

// -- 8 ------------------------------------------------------------------------------

Outcome criterion8() {
  const std::vector<Vertex> ns{4, 8, 16, 32, 64, 128};
  struct Row {
    PermFamily family;
    std::vector<double> published;
    double tolerance;
  };
  const std::vector<Row> rows{
      {PermFamily::kIdentity, {2.486, 4.225, 6.401, 8.33, 10.498, 13.135}, 0.15},
      {PermFamily::kTimesThree, {2.469, 4.039, 5.807, 7.662, 9.639, 11.718}, 0.15},
      {PermFamily::kRandom, {2.289, 4.499, 6.527, 8.781, 11.161, 14.151}, 0.20},
  };
  const auto run_with = [&](Interpretation interp, std::ostringstream& d) {
    ExperimentOptions o;
    o.interpretation = interp;
    o.threads = worker_count();
    bool ok = true;
    for (const auto& row : rows) {
      const auto t = convergence_experiment(ns, row.family, 1000, 20260101, o);
      double worst = 0;
      for (std::size_t i = 0; i < ns.size(); ++i) {
        const double dev = (t.rows[i].mean_rounds - row.published[i]) / row.published[i];
        if (std::abs(dev) > std::abs(worst)) worst = dev;
        ok = ok && std::abs(dev) <= row.tolerance && t.rows[i].unconverged == 0;
        // the table shipped with the library carries the same values
        ok = ok && reference_rounds(row.family, ns[i]).value_or(-1) == row.published[i];
      }
      d << perm_family_name(row.family) << " worst " << fmt("%+.1f%%", 100 * worst) << " (tol "
        << fmt("%.0f%%", 100 * row.tolerance) << "); ";
    }
    return ok;
  };
  std::ostringstream d;
  d << "node interpretation: ";
  bool pass = run_with(Interpretation::kNode, d);
  if (!pass) {
    d << "edge interpretation: ";
    pass = run_with(Interpretation::kEdge, d);
  }
  return {pass, d.str()};
}

// -- 9 ------------------------------------------------------------------------------

/// Walks with strictly increasing labels from i, counted per endpoint.
oracle::Mat oracle_walk_counts(std::uint32_t n, const std::vector<oracle::Pair>& edges,
                               const std::vector<std::uint32_t>& labeling) {
  oracle::Mat c(n, std::vector<int>(n, 0));
  std::function<void(std::uint32_t, std::uint32_t, std::uint32_t)> go = [&](std::uint32_t start, std::uint32_t at,
                                                                            std::uint32_t last) {
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (labeling[e] <= last) continue;
      const auto [u, v] = edges[e];
      if (u != at && v != at) continue;
      const std::uint32_t to = u == at ? v : u;
      ++c[start][to];
      go(start, to, labeling[e]);
    }
  };
  for (std::uint32_t i = 0; i < n; ++i) go(i, i, 0);
  return c;
}

Outcome criterion9() {
  std::size_t binom_checked = 0, binom_bad = 0;
  for (std::size_t n = 1; n <= 12; ++n)
    for (std::size_t k = 1; k <= 12; ++k) {
      const auto bk = lower_triangular_power(n, k);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const std::uint64_t expect = i >= j ? oracle::binomial(i - j + k - 1, k - 1) : 0;
          ++binom_checked;
          binom_bad += bk.at(i, j) != expect;
        }
    }

  std::size_t labelings = 0, pi_bad = 0;
  for (std::size_t m = 1; m <= 5; ++m)
    for (const auto& [n, edges] : oracle::connected_graphs_with_edges(m)) {
      const Graph g = oracle::to_graph(n, edges);
      std::vector<std::uint32_t> labeling(m);
      std::iota(labeling.begin(), labeling.end(), 1);
      do {
        ++labelings;
        const auto lib = integer_schedule_matrix(g, labeling);
        bool ok = lib == IntMatrix::identity(n) + path_count_matrix(g, labeling);
        const auto ref_prod = oracle_schedule_product(g, order_from_labeling(labeling), false);
        ok = ok && ref_prod == oracle::add(oracle::identity(n), oracle_walk_counts(n, edges, labeling));
        for (std::uint32_t i = 0; i < n && ok; ++i)
          for (std::uint32_t j = 0; j < n && ok; ++j) ok = lib.at(i, j) == ref_prod[i][j];
        pi_bad += !ok;
      } while (std::next_permutation(labeling.begin(), labeling.end()));
    }

  std::size_t delta_checked = 0, delta_bad = 0;
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t l = 0; l < n; ++l) {
            ++delta_checked;
            const Gf2Matrix expect = j == k ? delta(i, l, n) : Gf2Matrix(n);
            const IntMatrix expect_int = j == k ? delta_int(i, l, n) : IntMatrix(n);
            delta_bad += !(delta(i, j, n) * delta(k, l, n) == expect) ||
                         !(delta_int(i, j, n) * delta_int(k, l, n) == expect_int);
          }

  std::ostringstream d;
  d << "B^k: " << binom_checked << " entries, " << binom_bad << " wrong; product vs I + walk counts: " << labelings
    << " labelings, " << pi_bad << " wrong; delta rule: " << delta_checked << " cases, " << delta_bad << " wrong";
  return {binom_bad == 0 && pi_bad == 0 && delta_bad == 0, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                      criterion6, criterion7, criterion8, criterion9};
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  int failed = 0;
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    const int id = static_cast<int>(c + 1);
    if (!only.empty() && !only.count(id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[c]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.detail << "  ["
              << fmt("%.1f", secs) << " s]" << std::endl;
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
