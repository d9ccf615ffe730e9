#include "pavlov/strategies.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include <json.hpp>

namespace pavlov {

RoundClock::RoundClock(unsigned b, Vertex n) : length_(static_cast<std::size_t>(b) * (n > 0 ? n - 1 : 0) + 1) {
  require(b >= 1, "fairness bound must be >= 1");
}

namespace {

std::vector<Vertex> sorted(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  return v;
}

class StarStrategy final : public LuckStrategy {
 public:
  StarStrategy(const Star& s, std::vector<Vertex> order)
      : LuckStrategy(with_center(s)), center_(s.center), order_(std::move(order)) {}

  Vertex partner(const Configuration& x, Vertex v, const RoundContext&) const override {
    if (v != center_) return center_;
    const bool label = x.get(center_);
    for (Vertex leaf : order_)
      if (x.get(leaf) == label) return leaf;
    return order_.front();
  }
  bool oblivious() const override { return order_.size() == 1; }
  std::string describe() const override { return "star(center " + std::to_string(center_) + ")"; }

 private:
  static std::vector<Vertex> with_center(const Star& s) {
    std::vector<Vertex> d = s.leaves;
    d.push_back(s.center);
    return sorted(std::move(d));
  }

  Vertex center_;
  std::vector<Vertex> order_;
};

class MatchingStrategy final : public LuckStrategy {
 public:
  explicit MatchingStrategy(const Matching& m) : LuckStrategy(covered(m)) {
    for (const Edge& e : m.edges) {
      mate_[e.u] = e.v;
      mate_[e.v] = e.u;
    }
  }
  Vertex partner(const Configuration&, Vertex v, const RoundContext&) const override {
    const auto it = mate_.find(v);
    if (it == mate_.end()) fail(ErrorCode::kInvalidArgument, "node " + std::to_string(v) + " is not covered by the matching");
    return it->second;
  }
  bool oblivious() const override { return true; }
  std::string describe() const override { return "matching(" + std::to_string(mate_.size() / 2) + " edges)"; }

 private:
  static std::vector<Vertex> covered(const Matching& m) {
    std::vector<Vertex> d;
    for (const Edge& e : m.edges) {
      d.push_back(e.u);
      d.push_back(e.v);
    }
    d = sorted(std::move(d));
    if (std::adjacent_find(d.begin(), d.end()) != d.end())
      fail(ErrorCode::kInvalidArgument, "edges do not form a matching");
    return d;
  }

  std::unordered_map<Vertex, Vertex> mate_;
};

class LineStrategy final : public LuckStrategy {
 public:
  explicit LineStrategy(std::vector<Vertex> path) : LuckStrategy(sorted(path)), path_(std::move(path)) {
    if (path_.size() < 7 || path_.size() % 2 == 0)
      fail(ErrorCode::kInvalidArgument, "line strategy needs an odd path with at least 7 vertices; use the "
                                        "matching strategy for even paths");
    for (std::size_t i = 0; i < path_.size(); ++i) index_[path_[i]] = i;
    if (index_.size() != path_.size()) fail(ErrorCode::kInvalidArgument, "path repeats a vertex");
  }

  Vertex partner(const Configuration&, Vertex v, const RoundContext& ctx) const override {
    const auto it = index_.find(v);
    if (it == index_.end()) fail(ErrorCode::kInvalidArgument, "node " + std::to_string(v) + " is not on the path");
    const std::size_t i = it->second;
    if (ctx.round() == 0) {
      // matching (0,1),(2,3); vertex 4 leans right so that 3 stays put
      if (i < 4) return path_[i ^ 1];
      if (i == 4) return path_[5];
      return path_[i - 1];
    }
    if (i < 3) return path_[i == 0 ? 1 : i - 1];
    return path_[i % 2 == 1 ? i + 1 : i - 1];
  }
  bool oblivious() const override { return true; }
  std::string describe() const override { return "line(" + std::to_string(path_.size()) + ")"; }

 private:
  std::vector<Vertex> path_;
  std::unordered_map<Vertex, std::size_t> index_;
};

class ComposedStrategy final : public LuckStrategy {
 public:
  explicit ComposedStrategy(std::vector<StrategyPart> parts) : LuckStrategy(all_vertices(parts)), parts_(std::move(parts)) {
    for (std::size_t k = 0; k < parts_.size(); ++k) {
      if (!parts_[k].strategy) fail(ErrorCode::kInvalidArgument, "composed part without a strategy");
      if (sorted(parts_[k].vertices) != parts_[k].strategy->domain())
        fail(ErrorCode::kInvalidArgument, "part vertex set differs from its strategy's domain");
      for (Vertex v : parts_[k].vertices) owner_[v] = k;
    }
  }

  Vertex partner(const Configuration& x, Vertex v, const RoundContext& ctx) const override {
    const auto it = owner_.find(v);
    if (it == owner_.end()) fail(ErrorCode::kInvalidArgument, "node " + std::to_string(v) + " is in no part");
    const Vertex p = parts_[it->second].strategy->partner(x, v, ctx);
    const auto po = owner_.find(p);
    if (po == owner_.end() || po->second != it->second)
      fail(ErrorCode::kInternal, "composed strategy produced a cross-part partner " + std::to_string(v) + "-" +
                                     std::to_string(p));
    return p;
  }
  bool oblivious() const override {
    return std::all_of(parts_.begin(), parts_.end(), [](const StrategyPart& p) { return p.strategy->oblivious(); });
  }
  std::string describe() const override {
    std::string s = "compose[";
    for (std::size_t k = 0; k < parts_.size(); ++k) s += (k ? "," : "") + parts_[k].strategy->describe();
    return s + "]";
  }

 private:
  static std::vector<Vertex> all_vertices(const std::vector<StrategyPart>& parts) {
    std::vector<Vertex> d;
    for (const auto& p : parts) d.insert(d.end(), p.vertices.begin(), p.vertices.end());
    d = sorted(std::move(d));
    if (std::adjacent_find(d.begin(), d.end()) != d.end())
      fail(ErrorCode::kInvalidArgument, "strategy parts overlap");
    return d;
  }

  std::vector<StrategyPart> parts_;
  std::unordered_map<Vertex, std::size_t> owner_;
};

}  // namespace

// -- factories --------------------------------------------------------------------

StrategyPtr star_luck_strategy(const Star& star, std::vector<Vertex> leaf_order) {
  if (star.leaves.empty()) fail(ErrorCode::kInvalidArgument, "star without leaves");
  if (sorted(leaf_order) != sorted(star.leaves))
    fail(ErrorCode::kInvalidArgument, "leaf order must list every leaf exactly once");
  return std::make_shared<StarStrategy>(star, std::move(leaf_order));
}

std::vector<Vertex> leaf_order_after_center(const Star& star, std::span<const Vertex> schedule) {
  const auto c = std::find(schedule.begin(), schedule.end(), star.center);
  if (c == schedule.end()) fail(ErrorCode::kInvalidArgument, "schedule never names the star center");
  std::vector<Vertex> order;
  const std::vector<Vertex> leaves = sorted(star.leaves);
  const std::size_t start = static_cast<std::size_t>(c - schedule.begin());
  for (std::size_t k = 1; k <= schedule.size(); ++k) {
    const Vertex v = schedule[(start + k) % schedule.size()];
    if (std::binary_search(leaves.begin(), leaves.end(), v) && std::find(order.begin(), order.end(), v) == order.end())
      order.push_back(v);
  }
  if (order.size() != leaves.size()) fail(ErrorCode::kInvalidArgument, "schedule misses a leaf of the star");
  return order;
}

StrategyPtr star_luck_strategy(const Graph& g, std::span<const Vertex> schedule) {
  const Vertex n = g.vertex_count();
  if (n < 2 || g.edge_count() != n - 1) fail(ErrorCode::kInvalidArgument, "graph is not a star");
  Vertex center = 0;
  for (Vertex v = 1; v < n; ++v)
    if (g.degree(v) > g.degree(center)) center = v;
  if (g.degree(center) != n - 1) fail(ErrorCode::kInvalidArgument, "graph is not a star");
  Star s{center, {}};
  for (Vertex v = 0; v < n; ++v)
    if (v != center) s.leaves.push_back(v);
  auto order = schedule.empty() ? s.leaves : leaf_order_after_center(s, schedule);
  return star_luck_strategy(s, std::move(order));
}

StrategyPtr matching_luck_strategy(const Matching& m) {
  if (m.edges.empty()) fail(ErrorCode::kInvalidArgument, "empty matching");
  return std::make_shared<MatchingStrategy>(m);
}

StrategyPtr line_luck_strategy(std::vector<Vertex> path) { return std::make_shared<LineStrategy>(std::move(path)); }

StrategyPtr line_luck_strategy(const Graph& line) {
  const Vertex n = line.vertex_count();
  if (n < 2 || !is_tree(line)) fail(ErrorCode::kInvalidArgument, "graph is not a path");
  Vertex end = kNoVertex;
  for (Vertex v = 0; v < n; ++v) {
    if (line.degree(v) > 2) fail(ErrorCode::kInvalidArgument, "graph is not a path");
    if (line.degree(v) == 1 && end == kNoVertex) end = v;
  }
  std::vector<Vertex> path{end};
  Vertex prev = kNoVertex;
  while (path.size() < n) {
    for (Vertex w : line.neighbors(path.back())) {
      if (w != prev) {
        prev = path.back();
        path.push_back(w);
        break;
      }
    }
  }
  return line_luck_strategy(std::move(path));
}

StrategyPtr compose_strategies(std::vector<StrategyPart> parts) {
  if (parts.empty()) fail(ErrorCode::kInvalidArgument, "nothing to compose");
  return std::make_shared<ComposedStrategy>(std::move(parts));
}

StrategyPtr tree_luck_strategy(const Graph& tree, std::span<const Vertex> schedule) {
  if (!is_tree(tree)) fail(ErrorCode::kInvalidArgument, "tree strategy needs a tree");
  const StarDecomposition d = star_decomposition(root_tree(tree, 0));
  std::vector<StrategyPart> parts;
  for (const Star& s : d.stars) {
    std::vector<Vertex> part = s.leaves;
    part.push_back(s.center);
    auto order = schedule.empty() ? sorted(s.leaves) : leaf_order_after_center(s, schedule);
    parts.push_back({std::move(part), star_luck_strategy(s, std::move(order))});
  }
  return compose_strategies(std::move(parts));
}

StrategyPtr random_graph_luck_strategy(const Graph& g) {
  if (g.vertex_count() < 2) return nullptr;
  if (g.vertex_count() % 2 == 0) {
    const auto m = perfect_matching(g);
    return m ? matching_luck_strategy(*m) : nullptr;
  }
  const auto part = find_l7_partition(g);
  if (!part) return nullptr;
  std::vector<StrategyPart> parts;
  parts.push_back({part->path, line_luck_strategy(part->path)});
  if (!part->rest.empty()) parts.push_back({part->rest, matching_luck_strategy(part->matching)});
  return compose_strategies(std::move(parts));
}

// -- games --------------------------------------------------------------------------

namespace {

std::size_t round_length_for(const Graph& g, const Scheduler& s, std::optional<unsigned> b) {
  const auto bound = b ? b : s.fairness_bound();
  if (!bound) fail(ErrorCode::kInvalidArgument, "scheduler declares no fairness bound; pass b explicitly");
  return RoundClock(*bound, g.vertex_count()).round_length();
}

void require_node_daemon(const Scheduler& s) {
  if (s.kind() != DaemonKind::kNode)
    fail(ErrorCode::kInvalidArgument, "edge daemons leave the luck player no move; use a node scheduler");
}

EdgeId checked_edge(const Graph& g, Vertex v, Vertex p) {
  const auto e = g.find_edge(v, p);
  if (!e) fail(ErrorCode::kInternal, "strategy chose a non-neighbor " + std::to_string(p) + " for node " + std::to_string(v));
  return *e;
}

}  // namespace

GameResult play_game(const Graph& g, Scheduler& scheduler, const LuckStrategy& strategy, const Configuration& x0,
                     std::size_t max_rounds, std::optional<unsigned> b) {
  require_node_daemon(scheduler);
  require(x0.size() == g.vertex_count(), "configuration length does not match the graph");
  GameResult r;
  r.round_length = round_length_for(g, scheduler, b);
  r.final_config = x0;
  const std::size_t budget = max_rounds * r.round_length;
  RoundContext ctx{0, r.round_length};
  Configuration& x = r.final_config;
  while (!x.is_zero() && ctx.step < budget) {
    const Vertex v = scheduler.next(x).node;
    const Vertex p = strategy.partner(x, v, ctx);
    const EdgeId e = checked_edge(g, v, p);
    x.play(g.edge(e).u, g.edge(e).v);
    ++ctx.step;
  }
  r.won = x.is_zero();
  r.steps = ctx.step;
  r.rounds_used = (r.steps + r.round_length - 1) / r.round_length;
  return r;
}

Gf2Matrix oblivious_playout_matrix(const Graph& g, Scheduler& scheduler, const LuckStrategy& strategy,
                                   std::size_t rounds, std::optional<unsigned> b) {
  require_node_daemon(scheduler);
  if (!strategy.oblivious()) fail(ErrorCode::kInvalidArgument, "strategy reads the configuration");
  require(!scheduler.adaptive(), "adaptive schedulers read the configuration");
  const std::size_t len = round_length_for(g, scheduler, b);
  const Configuration dummy(g.vertex_count());
  std::vector<EdgeId> played;
  for (RoundContext ctx{0, len}; ctx.step < rounds * len; ++ctx.step) {
    const Vertex v = scheduler.next(dummy).node;
    played.push_back(checked_edge(g, v, strategy.partner(dummy, v, ctx)));
  }
  return schedule_matrix(g, played);
}

// -- solver ---------------------------------------------------------------------------

namespace {

struct StateKey {
  std::vector<std::uint64_t> words;
  std::uint64_t sched = 0;
  friend bool operator==(const StateKey&, const StateKey&) = default;
};

struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const {
    std::size_t h = splitmix64(k.sched);
    for (auto w : k.words) h = splitmix64(h ^ w);
    return h;
  }
};

struct Node {
  Configuration config;
  std::size_t parent = 0;
  Vertex scheduled = 0;
  Vertex partner = 0;
  std::shared_ptr<const Scheduler> sched;  // state before this node's next decision
};

}  // namespace

LuckGameSolution solve_luck_game(const Graph& g, const Scheduler& scheduler, const Configuration& x0,
                                 std::size_t horizon_rounds, std::optional<unsigned> b, std::size_t state_budget) {
  require_node_daemon(scheduler);
  if (!scheduler.deterministic())
    fail(ErrorCode::kUnsupported, "solver needs a deterministic scheduler; random decisions are not searched");
  if (g.vertex_count() > 8) fail(ErrorCode::kBudgetExceeded, "solver is limited to n <= 8");
  require(x0.size() == g.vertex_count(), "configuration length does not match the graph");
  const std::size_t horizon = horizon_rounds * round_length_for(g, scheduler, b);

  LuckGameSolution out;
  std::vector<Node> nodes;
  std::unordered_map<StateKey, std::size_t, StateKeyHash> seen;
  auto key_of = [](const Node& n) { return StateKey{{n.config.words().begin(), n.config.words().end()}, n.sched->state_key()}; };

  nodes.push_back({x0, 0, 0, 0, scheduler.clone()});
  seen.emplace(key_of(nodes[0]), 0);
  std::vector<std::size_t> frontier{0};
  std::optional<std::size_t> goal;
  if (x0.is_zero()) goal = 0;

  for (std::size_t depth = 0; !goal && depth < horizon && !frontier.empty(); ++depth) {
    std::vector<std::size_t> next;
    for (std::size_t id : frontier) {
      std::shared_ptr<Scheduler> advanced = nodes[id].sched->clone();
      const Vertex v = advanced->next(nodes[id].config).node;
      for (Vertex p : g.neighbors(v)) {
        Configuration y = nodes[id].config;
        y.play(v, p);
        Node child{std::move(y), id, v, p, advanced};
        auto [it, fresh] = seen.emplace(key_of(child), nodes.size());
        if (!fresh) continue;
        nodes.push_back(std::move(child));
        if (nodes.back().config.is_zero()) {
          goal = nodes.size() - 1;
          break;
        }
        next.push_back(nodes.size() - 1);
        if (nodes.size() > state_budget) fail(ErrorCode::kBudgetExceeded, "solver state budget exceeded");
      }
      if (goal) break;
    }
    // frontier nodes no longer need their scheduler snapshot
    for (std::size_t id : frontier) nodes[id].sched.reset();
    frontier = std::move(next);
  }

  out.states_explored = nodes.size();
  out.luck_wins = goal.has_value();
  out.state_space_closed = !goal && frontier.empty();
  if (goal) {
    std::vector<std::size_t> chain;
    for (std::size_t id = *goal; id != 0; id = nodes[id].parent) chain.push_back(id);
    std::reverse(chain.begin(), chain.end());
    out.steps_to_zero = chain.size();
    for (std::size_t id : chain) {
      const Configuration& before = nodes[nodes[id].parent].config;
      out.witness.push_back({before.hash(), before.to_string(), nodes[id].scheduled, nodes[id].partner});
    }
  }
  return out;
}

BranchReport enumerate_luck_branches(const Graph& g, const Scheduler& scheduler, const Configuration& x0,
                                     std::size_t steps, std::size_t checkpoint_every, std::size_t branch_budget) {
  require_node_daemon(scheduler);
  require(checkpoint_every >= 1, "checkpoint interval must be >= 1");
  require(x0.size() == g.vertex_count(), "configuration length does not match the graph");
  BranchReport r;
  std::vector<Vertex> trace;
  trace.reserve(steps);

  auto finish_branch = [&] {
    if (++r.branches > branch_budget) fail(ErrorCode::kBudgetExceeded, "branch budget exceeded");
    if (trace.empty()) return;
    const FairnessReport f = fairness_monitor(trace, g.vertex_count());
    r.worst_b = std::max(r.worst_b, f.b);
    r.all_rescheduled = r.all_rescheduled && f.all_rescheduled();
  };

  std::function<void(const Configuration&, const Scheduler&)> explore = [&](const Configuration& x,
                                                                             const Scheduler& s) {
    const std::size_t depth = trace.size();
    if (depth > 0 && depth % checkpoint_every == 0 && !(x == x0)) r.checkpoints_return = false;
    if (x.is_zero() && depth > 0) r.reached_zero = true;
    if (depth == steps) {
      finish_branch();
      return;
    }
    std::unique_ptr<Scheduler> advanced = s.clone();
    const Vertex v = advanced->next(x).node;
    trace.push_back(v);
    std::vector<Configuration> tried;
    for (Vertex p : g.neighbors(v)) {
      Configuration y = x;
      y.play(v, p);
      // the scheduler state is shared by all children, so equal configurations are equal states
      if (std::find(tried.begin(), tried.end(), y) != tried.end()) continue;
      tried.push_back(y);
      explore(y, *advanced);
    }
    trace.pop_back();
  };
  explore(x0, scheduler);
  return r;
}

std::string witness_json(const LuckGameSolution& s) {
  using nlohmann::json;
  json tail = json::object();
  if (s.luck_wins) {
    const std::size_t n = s.witness.empty() ? 0 : s.witness.front().config.size();
    tail = json{{"config", std::string(n, '0')}, {"zero", true}, {"children", json::array()}};
  }
  json node = tail;
  for (auto it = s.witness.rbegin(); it != s.witness.rend(); ++it) {
    node = json{{"config_hash", it->config_hash},
                {"config", it->config},
                {"scheduled", it->scheduled},
                {"partner", it->partner},
                {"children", json::array({node})}};
  }
  json root{{"luck_wins", s.luck_wins},
            {"state_space_closed", s.state_space_closed},
            {"states_explored", s.states_explored},
            {"steps_to_zero", s.steps_to_zero},
            {"tree", s.luck_wins ? node : json(nullptr)}};
  return root.dump(2);
}

}  // namespace pavlov
