#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pavlov/dynamics.hpp"
#include "pavlov/graph.hpp"
#include "pavlov/schedulers.hpp"

namespace pavlov {

// -- exhaustive 1-fair edge check ---------------------------------------------------

struct PermutationVerdict {
  std::vector<EdgeId> order;
  bool nilpotent = false;
  bool stabilizes = false;               // from every single-one start
  std::optional<Vertex> counterexample;  // the single 1 of a start that never reaches 0
};

struct ExhaustiveReport {
  std::string graph_id;
  Vertex n = 0;
  std::size_t m = 0;
  std::size_t permutations_tested = 0;
  std::size_t stabilizing = 0;
  /// Non-stabilizing permutations, at most `kMaxReportedFailures` of them.
  std::vector<PermutationVerdict> failures;
  std::vector<std::string> notes;

  bool all_stabilize() const { return stabilizing == permutations_tested; }
};

inline constexpr std::size_t kMaxExhaustiveEdges = 8;
inline constexpr std::size_t kMaxReportedFailures = 16;

/// Runs every edge permutation as a periodic schedule. Each permutation is
/// judged twice, by nilpotency of its matrix and by simulating the n
/// single-one starts; disagreement throws kInternal.
ExhaustiveReport exhaustive_1fair_check(const Graph& g, std::string graph_id = "");
std::string to_json(const ExhaustiveReport& r);

// -- Monte Carlo --------------------------------------------------------------------

using SchedulerFactory = std::function<SchedulerPtr(std::uint64_t seed)>;

struct StabilizationEstimate {
  std::size_t trials = 0;
  std::size_t successes = 0;
  double p_hat = 0.0;
  double stderr_ = 0.0;
  double mean_steps = 0.0;  // over successful trials
};

/// Trial i builds its scheduler and (when x0 is absent) a uniform random
/// start from streams derived from (seed, i). A trial succeeds when 0 is
/// reached within max_rounds rounds of b(items-1)+1 steps, with b the
/// declared bound (1 when none) and items the nodes or edges scheduled.
/// The result does not depend on `threads`.
StabilizationEstimate estimate_stabilization(const Graph& g, const SchedulerFactory& make,
                                             const std::optional<Configuration>& x0, std::size_t trials,
                                             std::size_t max_rounds, std::uint64_t seed, unsigned threads = 1);

// -- convergence experiment on C_n ------------------------------------------------

enum class Interpretation { kNode, kEdge };

struct ExperimentOptions {
  Interpretation interpretation = Interpretation::kNode;
  bool include_zero = false;     // allow the all-zero start (recorded as 0 rounds)
  std::size_t random_perms = 10;  // permutations maximized over by the random family
  unsigned threads = 1;
  std::size_t max_rounds = 0;     // 0 selects a generous default
};

struct ExperimentRow {
  std::string family;
  Vertex n = 0;
  std::size_t samples = 0;
  double mean_rounds = 0.0;
  double stderr_ = 0.0;
  std::uint64_t seed = 0;
  std::size_t unconverged = 0;
};

struct ExperimentTable {
  std::vector<ExperimentRow> rows;
};

/// One row per n: mean number of permutation passes to reach 0 on C_n, a
/// pass that reaches 0 midway counting in full. The random family reports
/// the largest mean among `random_perms` random permutations.
ExperimentTable convergence_experiment(const std::vector<Vertex>& n_list, PermFamily family, std::size_t samples,
                                       std::uint64_t seed, const ExperimentOptions& options = {});

std::string to_csv(const ExperimentTable& t);
std::string to_json(const ExperimentTable& t);

/// Published mean rounds for (family, n); absent when no value exists.
std::optional<double> reference_rounds(PermFamily family, Vertex n);

// -- fairness profile -------------------------------------------------------------

struct FairnessProfile {
  std::size_t steps = 0;
  std::size_t b = 0;  // worst count over all items
  double q50 = 0, q90 = 0, q95 = 0, q99 = 0;  // quantiles of per-gap max counts
  std::size_t gaps = 0;
  std::vector<Vertex> under_scheduled;
};

/// Runs the scheduler for `steps` steps from x0 (uniform random when
/// absent). For every pair of consecutive schedulings of an item it
/// records the largest number of times any other item was scheduled in
/// between. Items are nodes for node daemons and edges for edge daemons.
FairnessProfile fairness_profile(Scheduler& scheduler, std::size_t steps, std::uint64_t seed,
                                 const std::optional<Configuration>& x0 = std::nullopt);

}  // namespace pavlov
