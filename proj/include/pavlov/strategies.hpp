#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pavlov/dynamics.hpp"
#include "pavlov/gf2.hpp"
#include "pavlov/graph.hpp"
#include "pavlov/schedulers.hpp"

namespace pavlov {

/// Rounds of a b-fair schedule: windows of b(n-1)+1 consecutive steps.
class RoundClock {
 public:
  RoundClock(unsigned b, Vertex n);

  std::size_t round_length() const { return length_; }
  std::size_t step() const { return step_; }
  std::size_t round() const { return step_ / length_; }
  void tick() { ++step_; }

 private:
  std::size_t length_;
  std::size_t step_ = 0;
};

struct RoundContext {
  std::size_t step = 0;          // steps already played
  std::size_t round_length = 1;

  std::size_t round() const { return step / round_length; }
};

/// The luck player's policy: it names the partner of every scheduled node
/// in its domain. All vertex ids are ids of the host graph.
class LuckStrategy {
 public:
  virtual ~LuckStrategy() = default;

  virtual Vertex partner(const Configuration& x, Vertex scheduled, const RoundContext& ctx) const = 0;
  /// True when partner() ignores the configuration, so the played edges
  /// depend only on the schedule.
  virtual bool oblivious() const = 0;
  virtual std::string describe() const = 0;

  const std::vector<Vertex>& domain() const { return domain_; }

 protected:
  explicit LuckStrategy(std::vector<Vertex> domain) : domain_(std::move(domain)) {}

 private:
  std::vector<Vertex> domain_;
};

using StrategyPtr = std::shared_ptr<const LuckStrategy>;

/// Center holding 1 plays the first leaf holding 1, center holding 0 plays
/// the first leaf holding 0 (the first leaf when none does); leaves play
/// the center. "First" follows `leaf_order`, which must list every leaf.
StrategyPtr star_luck_strategy(const Star& star, std::vector<Vertex> leaf_order);
/// Leaf order for a periodic node permutation: leaves in the order they
/// are scheduled after the center.
std::vector<Vertex> leaf_order_after_center(const Star& star, std::span<const Vertex> schedule);
/// Star strategy on a host graph that must be a star (one center, every
/// other vertex a leaf). With an empty schedule leaves go in index order.
StrategyPtr star_luck_strategy(const Graph& g, std::span<const Vertex> schedule = {});

StrategyPtr matching_luck_strategy(const Matching& m);

/// Two-phase strategy on a path given by its vertices in path order; the
/// path must have odd length >= 7.
StrategyPtr line_luck_strategy(std::vector<Vertex> path);
StrategyPtr line_luck_strategy(const Graph& line);

struct StrategyPart {
  std::vector<Vertex> vertices;
  StrategyPtr strategy;
};

/// Dispatches on the part of the scheduled node. Parts must be disjoint and
/// each strategy's domain must equal its part.
StrategyPtr compose_strategies(std::vector<StrategyPart> parts);

/// Composition of star strategies over the star decomposition of the tree
/// rooted at 0. `schedule` (optional) orders the leaves of each star.
StrategyPtr tree_luck_strategy(const Graph& tree, std::span<const Vertex> schedule = {});

/// Perfect matching strategy for even n; line strategy on a 7-vertex path
/// plus matching on the rest for odd n. Absent when no certificate exists.
StrategyPtr random_graph_luck_strategy(const Graph& g);

struct GameResult {
  bool won = false;
  std::size_t rounds_used = 0;
  std::size_t steps = 0;
  std::size_t round_length = 0;
  Configuration final_config;
};

/// Deterministic playout: the scheduler names nodes, the strategy names
/// partners. b defaults to the scheduler's declared fairness bound.
/// Stops at 0 or after max_rounds rounds.
GameResult play_game(const Graph& g, Scheduler& scheduler, const LuckStrategy& strategy, const Configuration& x0,
                     std::size_t max_rounds, std::optional<unsigned> b = std::nullopt);

/// For an oblivious strategy: the GF(2) matrix of everything played in
/// `rounds` rounds. The strategy wins from every start iff it is zero.
Gf2Matrix oblivious_playout_matrix(const Graph& g, Scheduler& scheduler, const LuckStrategy& strategy,
                                   std::size_t rounds, std::optional<unsigned> b = std::nullopt);

struct WitnessStep {
  std::size_t config_hash = 0;
  std::string config;
  Vertex scheduled = 0;
  Vertex partner = 0;
};

struct LuckGameSolution {
  bool luck_wins = false;
  /// True when the search ran out of new states before the horizon, so a
  /// loss holds for every horizon.
  bool state_space_closed = false;
  std::size_t states_explored = 0;
  std::size_t steps_to_zero = 0;
  /// Winning line of play (the scheduler is deterministic, so the strategy
  /// tree is a single branch).
  std::vector<WitnessStep> witness;
};

inline constexpr std::size_t kSolverStateBudget = 5'000'000;

/// Exact reachability search over (configuration, scheduler state): luck
/// chooses partners, the scheduler is replayed by cloning. Needs a
/// deterministic node scheduler and n <= 8.
LuckGameSolution solve_luck_game(const Graph& g, const Scheduler& scheduler, const Configuration& x0,
                                 std::size_t horizon_rounds, std::optional<unsigned> b = std::nullopt,
                                 std::size_t state_budget = kSolverStateBudget);

struct BranchReport {
  std::size_t branches = 0;              // distinct lines of play explored
  bool checkpoints_return = true;        // every checkpoint configuration equals x0
  bool reached_zero = false;
  std::size_t worst_b = 0;               // largest fairness count seen on any branch
  bool all_rescheduled = true;           // every node occurs twice on every branch
};

/// Plays `steps` steps of a node scheduler from x0 along every partner
/// choice. Choices that lead to the same configuration and scheduler state
/// are merged. Every `checkpoint_every` steps the configuration is compared
/// with x0, and each finished branch's node trace goes through the fairness
/// monitor.
BranchReport enumerate_luck_branches(const Graph& g, const Scheduler& scheduler, const Configuration& x0,
                                     std::size_t steps, std::size_t checkpoint_every,
                                     std::size_t branch_budget = kSolverStateBudget);

/// Nested JSON: each node holds the configuration (hash and bits), the
/// scheduled vertex, the chosen partner and its children.
std::string witness_json(const LuckGameSolution& s);

}  // namespace pavlov
