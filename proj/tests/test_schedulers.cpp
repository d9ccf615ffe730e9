#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>

#include "doctest.h"
#include "oracles.hpp"
#include "pavlov/gf2.hpp"
#include "pavlov/schedulers.hpp"

using namespace pavlov;

namespace {

std::vector<SchedulerDecision> take(Scheduler& s, const Configuration& x, std::size_t k) {
  std::vector<SchedulerDecision> out;
  for (std::size_t i = 0; i < k; ++i) out.push_back(s.next(x));
  return out;
}

}  // namespace

TEST_CASE("random daemons replay from their seed") {
  const Graph g = generate(Family::kCycle, 9);
  const auto x = Configuration::all_ones(9);
  auto a = random_edge_scheduler(g, 42), b = random_edge_scheduler(g, 42), c = random_edge_scheduler(g, 43);
  const auto da = take(*a, x, 50);
  CHECK(da == take(*b, x, 50));
  CHECK_FALSE(da == take(*c, x, 50));
  for (const auto& d : da) CHECK(d.edge < g.edge_count());
  CHECK_FALSE(a->deterministic());

  auto n = random_node_scheduler(Graph(4, {{0, 1}, {1, 2}}), 1);
  for (int i = 0; i < 200; ++i) CHECK(n->next(Configuration(4)).node != 3);  // never the isolated node
}

TEST_CASE("random partners are neighbors and roughly uniform") {
  const Graph star = generate(Family::kStar, 4);
  auto s = random_node_scheduler(star, 5);
  std::map<Vertex, int> hits;
  for (int i = 0; i < 8000; ++i) {
    const Vertex p = s->random_partner(0);
    CHECK(star.has_edge(0, p));
    ++hits[p];
  }
  for (Vertex l = 1; l <= 4; ++l) CHECK(hits[l] == doctest::Approx(2000).epsilon(0.1));
}

TEST_CASE("periodic and constant daemons") {
  const Graph g = generate(Family::kLine, 4);
  auto p = periodic_scheduler(g, DaemonKind::kEdge, {2, 0, 1}, 0);
  CHECK(p->fairness_bound() == 1U);
  const auto d = take(*p, Configuration(4), 6);
  CHECK(d[0].edge == 2);
  CHECK(d[3].edge == 2);
  CHECK(d[5].edge == 1);
  CHECK_THROWS_AS(periodic_scheduler(g, DaemonKind::kEdge, {0, 0, 1}, 0), Error);
  CHECK_THROWS_AS(periodic_scheduler(g, DaemonKind::kNode, {0, 1, 2}, 0), Error);

  auto c = degenerate_daemon(g, DaemonKind::kEdge, 1);
  for (const auto& e : take(*c, Configuration(4), 5)) CHECK(e.edge == 1);
  CHECK_FALSE(c->fairness_bound().has_value());
}

TEST_CASE("advance plays the decision") {
  const Graph g = generate(Family::kLine, 3);
  auto s = make_scheduler(g, "constant-edge:1", 0);
  auto x = Configuration::parse("001");
  CHECK(s->advance(x) == 1);
  CHECK(x.to_string() == "011");
}

TEST_CASE("the stabilizing daemon reaches zero from every start") {
  for (const Graph& g : {generate(Family::kK4), generate(Family::kCycle, 5), generate(Family::kStar, 4)}) {
    const Vertex n = g.vertex_count();
    for (std::uint64_t mask = 0; mask < (1U << n); ++mask) {
      auto s = theorem1_stabilizing_daemon(g);
      auto x = Configuration::from_mask(n, mask);
      for (std::size_t t = 0; t < 2 * g.edge_count() + 1 && !x.is_zero(); ++t) s->advance(x);
      CHECK(x.is_zero());
    }
  }
}

TEST_CASE("node permutation families") {
  CHECK(node_permutation(PermFamily::kIdentity, 4) == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(node_permutation(PermFamily::kTimesThree, 8) == std::vector<Vertex>{0, 3, 6, 1, 4, 7, 2, 5});
  CHECK(node_permutation(PermFamily::kPattern13, 8) == std::vector<Vertex>{0, 2, 1, 3, 4, 6, 5, 7});
  CHECK_THROWS_AS(node_permutation(PermFamily::kTimesThree, 9), Error);
  Rng rng(1);
  auto r = node_permutation(PermFamily::kRandom, 30, &rng);
  std::sort(r.begin(), r.end());
  CHECK(r == node_permutation(PermFamily::kIdentity, 30));
  CHECK(parse_perm_family("(13)") == PermFamily::kPattern13);
  CHECK(parse_perm_family("rd") == PermFamily::kRandom);
  CHECK(perm_family_name(PermFamily::kTimesThree) == "p3");
}

TEST_CASE("fairness monitor agrees with the definition") {
  Rng rng(23);
  for (int t = 0; t < 300; ++t) {
    const Vertex n = 2 + static_cast<Vertex>(rng.below(6));
    std::vector<Vertex> trace(1 + rng.below(40));
    for (auto& v : trace) v = static_cast<Vertex>(rng.below(n));
    const auto rep = fairness_monitor(trace, n);
    CHECK(rep.b == oracle::fairness_b(trace, n));
    for (Vertex v = 0; v < n; ++v) {
      const auto occurrences = std::count(trace.begin(), trace.end(), v);
      CHECK((occurrences < 2) == (std::find(rep.under_scheduled.begin(), rep.under_scheduled.end(), v) !=
                                  rep.under_scheduled.end()));
    }
  }
  const std::vector<Vertex> perm{2, 0, 1, 2, 0, 1, 2, 0, 1};
  CHECK(fairness_monitor(perm, 3).b == 1);
  const std::vector<Vertex> skewed{0, 1, 1, 1, 0};
  CHECK(fairness_monitor(skewed, 2).b == 3);

  // edge traces count both endpoints
  const Graph g = generate(Family::kLine, 3);
  const std::vector<EdgeId> edges{0, 1, 0, 1};
  CHECK(fairness_monitor_edges(g, edges).b == 1);
}

TEST_CASE("random b-fair traces stay within their bound") {
  Rng rng(77);
  for (unsigned b = 1; b <= 3; ++b) {
    for (Vertex n : {2U, 5U, 9U}) {
      const auto trace = random_bfair_trace(n, b, 400, rng);
      CHECK(trace.size() == 400);
      CHECK(oracle::fairness_b(trace, n) <= b);
      const std::size_t window = b * (n - 1) + 1;
      for (std::size_t i = 0; i + window <= trace.size(); ++i) {
        std::vector<bool> seen(n, false);
        for (std::size_t k = i; k < i + window; ++k) seen[trace[k]] = true;
        REQUIRE(std::all_of(seen.begin(), seen.end(), [](bool s) { return s; }));
      }
    }
  }
}

TEST_CASE("scheduler specs") {
  const Graph c5 = generate(Family::kCycle, 5);
  for (const char* spec : {"random-edge", "random-node", "periodic-edge", "periodic-edge:4,3,2,1,0", "periodic-node:p3",
                           "periodic-node:pattern13", "periodic-node:random", "periodic-node:4,3,2,1,0",
                           "constant-node:2", "theorem1", "two-fair", "one-fair"}) {
    CAPTURE(spec);
    auto s = make_scheduler(c5, spec, 9);
    CHECK(s != nullptr);
    CHECK_FALSE(s->describe().empty());
  }
  CHECK(make_scheduler(c5, "two-fair", 0)->fairness_bound() == 2U);
  CHECK(make_scheduler(generate(Family::kStar, 6), "star-3fair", 0)->fairness_bound() == 3U);
  CHECK(make_scheduler(generate(Family::kComplete, 3), "k3-adaptive:1", 0)->adaptive());
  CHECK_THROWS_AS(make_scheduler(c5, "k3-adaptive", 0), Error);
  CHECK_THROWS_AS(make_scheduler(c5, "round-robin", 0), Error);
  CHECK_THROWS_AS(make_scheduler(c5, "constant-edge:9", 0), Error);
  CHECK_FALSE(scheduler_spec_names().empty());
}

TEST_CASE("schedule files") {
  const Graph g = generate(Family::kLine, 4);
  const std::vector<SchedulerDecision> d{SchedulerDecision::of_edge(2), SchedulerDecision::of_node(1),
                                         SchedulerDecision::of_edge(0)};
  const auto text = format_schedule(g, d);
  CHECK(text == "E 2 3\nN 1\nE 0 1\n");
  CHECK(parse_schedule(g, "# header\n" + text) == d);
  try {
    parse_schedule(g, "E 0 1\nE 0 2\n");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }

  const std::string path = "pavlov_schedule_test.txt";
  {
    std::ofstream out(path);
    out << "N 3\nN 0\n";
  }
  auto s = make_scheduler(g, "file:" + path, 0);
  CHECK(s->kind() == DaemonKind::kNode);
  CHECK(take(*s, Configuration(4), 3)[2].node == 3);
  std::remove(path.c_str());
  CHECK_THROWS_AS(make_scheduler(g, "file:/nonexistent/schedule", 0), Error);
}

TEST_CASE("2-fair enumeration shape") {
  for (const Graph& g : {generate(Family::kLine, 2 + 1), generate(Family::kStar, 4), generate(Family::kK4),
                         generate(Family::kCycle, 6), generate(Family::kK3Merge)}) {
    const auto walk = construct_2fair_enumeration(g);
    std::vector<int> count(g.edge_count(), 0);
    for (EdgeId e : walk) ++count[e];
    for (int c : count) CHECK((c == 1 || c == 2));
    for (std::size_t i = 0; i < walk.size(); ++i) {
      const Edge a = g.edge(walk[i]), b = g.edge(walk[(i + 1) % walk.size()]);
      const int shared = (a.u == b.u) + (a.u == b.v) + (a.v == b.u) + (a.v == b.v);
      CHECK(shared == 1);
    }
  }
  CHECK_THROWS_AS(construct_2fair_enumeration(generate(Family::kLine, 2)), Error);
}

TEST_CASE("1-fair non-nilpotent orders") {
  for (const Graph& g : {generate(Family::kCycle, 4), generate(Family::kK4), generate(Family::kLine, 3),
                         generate(Family::kLine, 4), generate(Family::kStar, 2)}) {
    const auto c = construct_1fair_nonnilpotent(g);
    CHECK_FALSE(c.nilpotent);
    CHECK_FALSE(is_nilpotent(schedule_matrix(g, c.order)));
    CHECK(labeling_from_order(c.order) == c.labeling);
  }
  CHECK(construct_1fair_nonnilpotent(generate(Family::kLine, 4)).s2_parity.has_value());
  try {
    construct_1fair_nonnilpotent(generate(Family::kLine, 6));
    FAIL("L6 has no construction");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kUnsupported);
  }
}

TEST_CASE("3-fair star schedule") {
  const auto s = star_3fair_schedule(5);
  CHECK(s.period == std::vector<Vertex>{0, 1, 1, 3, 2, 1, 4, 4});
  CHECK(s.x0.to_string() == "011000");
  CHECK(fairness_monitor(s.period, 6).b <= 3);
  CHECK_THROWS_AS(star_3fair_schedule(4), Error);
}

TEST_CASE("K3 adaptive daemon restores all-ones after every block") {
  const Graph k3 = generate(Family::kComplete, 3);
  for (Vertex start = 0; start < 3; ++start) {
    auto d = k3_adaptive_daemon(k3, 1, start);
    auto x = Configuration::all_ones(3);
    std::vector<Vertex> trace;
    for (int step = 0; step < 60; ++step) {
      const auto dec = d->next(x);
      trace.push_back(dec.node);
      x.play(dec.node, d->random_partner(dec.node));
      if (step % 3 == 2) CHECK(x.popcount() == 3);
    }
    CHECK(fairness_monitor(trace, 3).b <= 2);
  }
  auto d = k3_adaptive_daemon(k3, 1);
  CHECK_THROWS_AS(d->next(Configuration::parse("100")), Error);
}
