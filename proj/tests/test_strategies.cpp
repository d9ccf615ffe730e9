#include <numeric>

#include "doctest.h"
#include "oracles.hpp"
#include "pavlov/strategies.hpp"

#include <json.hpp>

using namespace pavlov;

namespace {

std::vector<Vertex> iota_perm(Vertex n) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

/// Plays a periodic node permutation with `strategy` from every start and
/// reports whether all of them reach 0 within `rounds` rounds.
bool wins_everywhere(const Graph& g, const std::vector<Vertex>& perm, const LuckStrategy& strategy,
                     std::size_t rounds) {
  const Vertex n = g.vertex_count();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    auto s = periodic_scheduler(g, DaemonKind::kNode, {perm.begin(), perm.end()}, 0);
    if (!play_game(g, *s, strategy, Configuration::from_mask(n, mask), rounds).won) return false;
  }
  return true;
}

/// Returns a vertex outside its own domain.
class RogueStrategy final : public LuckStrategy {
 public:
  explicit RogueStrategy(std::vector<Vertex> d, Vertex target) : LuckStrategy(std::move(d)), target_(target) {}
  Vertex partner(const Configuration&, Vertex, const RoundContext&) const override { return target_; }
  bool oblivious() const override { return true; }
  std::string describe() const override { return "rogue"; }

 private:
  Vertex target_;
};

}  // namespace

TEST_CASE("round clock") {
  RoundClock c(2, 5);
  CHECK(c.round_length() == 9);
  for (int i = 0; i < 9; ++i) c.tick();
  CHECK(c.round() == 1);
  CHECK(RoundContext{17, 9}.round() == 1);
}

TEST_CASE("star strategy follows its rule") {
  const Graph star = generate(Family::kStar, 3);
  const auto st = star_luck_strategy(star, std::vector<Vertex>{0, 2, 1, 3});
  const RoundContext ctx{};
  // leaf order from the schedule: 2, 1, 3
  CHECK(st->partner(Configuration::parse("1111"), 0, ctx) == 2);
  CHECK(st->partner(Configuration::parse("1100"), 0, ctx) == 1);
  CHECK(st->partner(Configuration::parse("0110"), 0, ctx) == 3);
  CHECK(st->partner(Configuration::parse("0111"), 0, ctx) == 2);  // no leaf holds 0
  CHECK(st->partner(Configuration::parse("0111"), 3, ctx) == 0);
  CHECK(st->domain() == std::vector<Vertex>{0, 1, 2, 3});
  CHECK_FALSE(st->oblivious());
  CHECK(star_luck_strategy(generate(Family::kStar, 1))->oblivious());
  CHECK_THROWS_AS(star_luck_strategy(generate(Family::kLine, 4)), Error);
}

TEST_CASE("star strategy wins against every permutation on small stars") {
  for (Vertex leaves = 1; leaves <= 3; ++leaves) {
    const Graph star = generate(Family::kStar, leaves);
    auto perm = iota_perm(leaves + 1);
    do {
      const auto st = star_luck_strategy(star, perm);
      CHECK(wins_everywhere(star, perm, *st, 64));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("matching strategy zeroes a perfectly matched graph in one round") {
  const Graph l6 = generate(Family::kLine, 6);
  const auto m = perfect_matching(l6);
  REQUIRE(m.has_value());
  const auto st = matching_luck_strategy(*m);
  CHECK(st->oblivious());
  auto perm = iota_perm(6);
  do {
    auto s = periodic_scheduler(l6, DaemonKind::kNode, {perm.begin(), perm.end()}, 0);
    CHECK(oblivious_playout_matrix(l6, *s, *st, 1).is_zero());
  } while (std::next_permutation(perm.begin(), perm.end()));

  // the same holds for 3-fair traces, whose rounds are longer
  Rng rng(4);
  for (int t = 0; t < 50; ++t) {
    const auto trace = random_bfair_trace(6, 3, 64, rng);
    auto s = sequence_scheduler(l6, DaemonKind::kNode, {trace.begin(), trace.end()}, 0, 3U);
    CHECK(oblivious_playout_matrix(l6, *s, *st, 1).is_zero());
  }
  Matching partial;
  partial.edges = {{0, 1}};
  CHECK_THROWS_AS(matching_luck_strategy(partial)->partner(Configuration(6), 3, {}), Error);
}

TEST_CASE("line strategy phases") {
  const auto st = line_luck_strategy(generate(Family::kLine, 9));
  const RoundContext first{0, 9}, later{9, 9};
  const Configuration x(9);
  CHECK(st->partner(x, 0, first) == 1);
  CHECK(st->partner(x, 3, first) == 2);
  CHECK(st->partner(x, 4, first) == 5);
  CHECK(st->partner(x, 6, first) == 5);
  CHECK(st->partner(x, 2, later) == 1);
  CHECK(st->partner(x, 3, later) == 4);
  CHECK(st->partner(x, 8, later) == 7);
  CHECK_THROWS_AS(line_luck_strategy(generate(Family::kLine, 8)), Error);
  CHECK_THROWS_AS(line_luck_strategy(generate(Family::kLine, 5)), Error);

  // the path may be numbered arbitrarily in the host graph
  const Graph relabeled(7, {{3, 0}, {0, 5}, {5, 1}, {1, 6}, {6, 2}, {2, 4}});
  const auto st2 = line_luck_strategy(relabeled);
  auto s = periodic_scheduler(relabeled, DaemonKind::kNode, iota_perm(7), 0);
  CHECK(oblivious_playout_matrix(relabeled, *s, *st2, 2).is_zero());
}

TEST_CASE("line strategy wins on L7 from every start under the identity order") {
  const Graph l7 = generate(Family::kLine, 7);
  const auto st = line_luck_strategy(l7);
  for (std::uint64_t mask = 0; mask < 128; ++mask) {
    auto s = periodic_scheduler(l7, DaemonKind::kNode, iota_perm(7), 0);
    const auto r = play_game(l7, *s, *st, Configuration::from_mask(7, mask), 2);
    CHECK(r.won);
    CHECK(r.rounds_used <= 2);
  }
}

TEST_CASE("composition dispatches by part and keeps parts independent") {
  // two disjoint edges joined by a bridge: each part plays as if alone
  const Graph g(4, {{0, 1}, {1, 2}, {2, 3}});
  Matching a, b;
  a.edges = {{0, 1}};
  b.edges = {{2, 3}};
  const auto composed = compose_strategies(
      {{{0, 1}, matching_luck_strategy(a)}, {{2, 3}, matching_luck_strategy(b)}});
  CHECK(composed->partner(Configuration(4), 1, {}) == 0);
  CHECK(composed->partner(Configuration(4), 2, {}) == 3);
  CHECK(composed->oblivious());

  // the trajectory on each part equals the trajectory of that part alone
  const Graph alone(2, {{0, 1}});
  Rng rng(8);
  for (int t = 0; t < 100; ++t) {
    auto x = Configuration::from_mask(4, rng.below(16));
    auto y = Configuration::from_mask(2, x.to_mask() & 3U);
    for (int k = 0; k < 10; ++k) {
      const auto v = static_cast<Vertex>(rng.below(4));
      x.play(v, composed->partner(x, v, {}));
      if (v < 2) y.play(v, 1 - v);
      CHECK((x.to_mask() & 3U) == y.to_mask());
    }
  }

  CHECK_THROWS_AS(compose_strategies({{{0, 1}, matching_luck_strategy(a)}, {{1, 2}, matching_luck_strategy(b)}}),
                  Error);
  const auto rogue = std::make_shared<RogueStrategy>(std::vector<Vertex>{0, 1}, 3);
  const auto bad = compose_strategies({{{0, 1}, rogue}, {{2, 3}, matching_luck_strategy(b)}});
  try {
    bad->partner(Configuration(4), 0, {});
    FAIL("cross-part partner");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInternal);
  }
}

TEST_CASE("tree strategy wins on every tree up to six vertices") {
  for (std::uint32_t n = 2; n <= 6; ++n) {
    for (const auto& edges : oracle::trees(n)) {
      const Graph t = oracle::to_graph(n, edges);
      auto perm = iota_perm(n);
      do {
        const auto st = tree_luck_strategy(t, perm);
        REQUIRE(wins_everywhere(t, perm, *st, 1U << n));
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
}

TEST_CASE("random-graph strategy picks a certificate") {
  CHECK(random_graph_luck_strategy(generate(Family::kLine, 8))->describe().find("matching") != std::string::npos);
  CHECK(random_graph_luck_strategy(generate(Family::kLine, 9)) != nullptr);
  CHECK(random_graph_luck_strategy(generate(Family::kStar, 3)) == nullptr);
}

TEST_CASE("play_game edge cases") {
  const Graph l2 = generate(Family::kLine, 2);
  Matching m;
  m.edges = {{0, 1}};
  const auto st = matching_luck_strategy(m);
  auto s = periodic_scheduler(l2, DaemonKind::kNode, {0, 1}, 0);
  const auto zero = play_game(l2, *s, *st, Configuration(2), 3);
  CHECK(zero.won);
  CHECK(zero.steps == 0);

  auto e = periodic_scheduler(l2, DaemonKind::kEdge, {0}, 0);
  CHECK_THROWS_AS(play_game(l2, *e, *st, Configuration::parse("10"), 3), Error);
  auto r = random_node_scheduler(l2, 0);
  CHECK_THROWS_AS(play_game(l2, *r, *st, Configuration::parse("10"), 3), Error);  // no declared bound
  CHECK(play_game(l2, *r, *st, Configuration::parse("10"), 3, 1U).won);
}

TEST_CASE("exact solver") {
  const Graph star = generate(Family::kStar, 3);
  auto perm = iota_perm(4);
  std::reverse(perm.begin(), perm.end());
  auto s = periodic_scheduler(star, DaemonKind::kNode, {perm.begin(), perm.end()}, 0);
  const auto win = solve_luck_game(star, *s, Configuration::parse("1011"), 16);
  CHECK(win.luck_wins);
  CHECK(win.witness.size() == win.steps_to_zero);
  // replaying the witness reaches 0
  auto x = Configuration::parse("1011");
  for (const auto& w : win.witness) {
    CHECK(w.config == x.to_string());
    x.play(w.scheduled, w.partner);
  }
  CHECK(x.is_zero());

  const auto j = nlohmann::json::parse(witness_json(win));
  CHECK(j["luck_wins"] == true);
  auto node = j["tree"];
  while (node.contains("children") && !node["children"].empty()) node = node["children"][0];
  CHECK(node["zero"] == true);

  const Graph k3 = generate(Family::kComplete, 3);
  auto d = k3_adaptive_daemon(k3, 0);
  const auto lose = solve_luck_game(k3, *d, Configuration::all_ones(3), 50);
  CHECK_FALSE(lose.luck_wins);
  CHECK(lose.state_space_closed);

  auto rnd = random_node_scheduler(star, 0);
  CHECK_THROWS_AS(solve_luck_game(star, *rnd, Configuration::parse("1011"), 4, 1U), Error);
  auto big = periodic_scheduler(generate(Family::kLine, 9), DaemonKind::kNode, iota_perm(9), 0);
  CHECK_THROWS_AS(solve_luck_game(generate(Family::kLine, 9), *big, Configuration::all_ones(9), 4), Error);
}

TEST_CASE("branch enumeration") {
  const Graph k3 = generate(Family::kComplete, 3);
  auto d = k3_adaptive_daemon(k3, 0);
  const auto rep = enumerate_luck_branches(k3, *d, Configuration::all_ones(3), 9, 3);
  CHECK(rep.branches == 64);  // the closing move of a block merges its two choices
  CHECK(rep.checkpoints_return);
  CHECK_FALSE(rep.reached_zero);
  CHECK(rep.worst_b <= 2);
}

TEST_CASE("center and first leaf clear each other") {
  const Graph star = generate(Family::kStar, 3);
  const auto st = star_luck_strategy(star, iota_perm(4));
  auto x = Configuration::parse("1100");
  const Vertex p = st->partner(x, 0, {});
  CHECK(p == 1);
  x.play(0, p);
  CHECK(x.to_string() == "0000");
}

TEST_CASE("line strategy under random 2-fair traces on L9") {
  const Graph l9 = generate(Family::kLine, 9);
  const auto st = line_luck_strategy(l9);
  Rng rng(91);
  for (int t = 0; t < 10; ++t) {
    const auto trace = random_bfair_trace(9, 2, 2 * 17, rng);
    for (int k = 0; k < 50; ++k) {
      auto s = sequence_scheduler(l9, DaemonKind::kNode, {trace.begin(), trace.end()}, 0, 2U);
      CHECK(play_game(l9, *s, *st, Configuration::from_mask(9, rng.below(512)), 2).won);
    }
  }
}

TEST_CASE("an extra edge never changes the matching trajectory") {
  const Graph l4 = generate(Family::kLine, 4);
  const Graph plus(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  const auto st = matching_luck_strategy(*perfect_matching(l4));
  Rng rng(6);
  for (int t = 0; t < 100; ++t) {
    const auto trace = random_bfair_trace(4, 2, 20, rng);
    auto a = Configuration::from_mask(4, rng.below(16));
    auto b = a;
    for (std::size_t i = 0; i < trace.size(); ++i) {
      const Vertex v = trace[i];
      const Vertex pa = st->partner(a, v, {i, 7});
      const Vertex pb = st->partner(b, v, {i, 7});
      REQUIRE(l4.has_edge(v, pa));
      REQUIRE(plus.has_edge(v, pb));
      a.play(v, pa);
      b.play(v, pb);
      CHECK(a == b);
    }
  }
}

TEST_CASE("tree strategy on eight-vertex trees") {
  Rng rng(88);
  for (const auto& edges : oracle::trees(8)) {
    const Graph t = oracle::to_graph(8, edges);
    for (int k = 0; k < 20; ++k) {
      auto perm = iota_perm(8);
      rng.shuffle(perm.begin(), perm.end());
      const auto st = tree_luck_strategy(t, perm);
      CHECK(wins_everywhere(t, perm, *st, 256));
    }
  }
}
