#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pavlov/dynamics.hpp"
#include "pavlov/graph.hpp"
#include "pavlov/rng.hpp"

namespace pavlov {

enum class DaemonKind { kEdge, kNode };

struct SchedulerDecision {
  DaemonKind kind = DaemonKind::kEdge;
  EdgeId edge = 0;  // meaningful for kEdge
  Vertex node = 0;  // meaningful for kNode

  static SchedulerDecision of_edge(EdgeId e) { return {DaemonKind::kEdge, e, 0}; }
  static SchedulerDecision of_node(Vertex v) { return {DaemonKind::kNode, 0, v}; }
  friend bool operator==(const SchedulerDecision&, const SchedulerDecision&) = default;
};

/// A daemon bound to one graph. Edge daemons name the played edge; node
/// daemons name one endpoint, and the partner is drawn uniformly from its
/// neighbors by `random_partner` (or chosen by a luck strategy in games).
///
/// Instances carry mutable state and their own random stream, so one
/// instance belongs to one thread.
class Scheduler {
 public:
  virtual ~Scheduler() = default;

  virtual DaemonKind kind() const = 0;
  /// Adaptive schedulers read the configuration passed to next(); all
  /// others ignore it.
  virtual bool adaptive() const { return false; }
  /// False when decisions (not partners) consume randomness.
  virtual bool deterministic() const { return true; }
  virtual SchedulerDecision next(const Configuration& view) = 0;
  virtual std::unique_ptr<Scheduler> clone() const = 0;
  /// Compact encoding of the decision state, used to memoize searches over
  /// deterministic schedulers.
  virtual std::uint64_t state_key() const = 0;
  /// Declared worst-case fairness bound, when the schedule has one.
  virtual std::optional<unsigned> fairness_bound() const { return std::nullopt; }
  virtual std::string describe() const = 0;

  const Graph& graph() const { return *graph_; }
  Vertex random_partner(Vertex v);
  /// Resolves the decision (drawing a partner for node daemons) and plays
  /// it on x. Returns the played edge.
  EdgeId advance(Configuration& x);

 protected:
  Scheduler(std::shared_ptr<const Graph> g, std::uint64_t seed) : graph_(std::move(g)), rng_(seed) {}

  std::shared_ptr<const Graph> graph_;
  Rng rng_;
};

using SchedulerPtr = std::unique_ptr<Scheduler>;

/// Uniform edge each step.
SchedulerPtr random_edge_scheduler(const Graph& g, std::uint64_t seed);
/// Uniform non-isolated node each step, random partner.
SchedulerPtr random_node_scheduler(const Graph& g, std::uint64_t seed);
/// Repeats `perm` forever; perm must be a permutation of the edges (kEdge)
/// or of the vertices (kNode).
SchedulerPtr periodic_scheduler(const Graph& g, DaemonKind kind, std::vector<std::uint32_t> perm, std::uint64_t seed);
/// Repeats an arbitrary nonempty sequence of edges or nodes forever.
SchedulerPtr sequence_scheduler(const Graph& g, DaemonKind kind, std::vector<std::uint32_t> sequence,
                                std::uint64_t seed, std::optional<unsigned> declared_bound = std::nullopt,
                                std::string label = "sequence");
/// Schedules the same edge or node forever.
SchedulerPtr degenerate_daemon(const Graph& g, DaemonKind kind, std::uint32_t target, std::uint64_t seed = 0);
/// Plays every edge twice in index order, then repeats the last edge.
SchedulerPtr theorem1_stabilizing_daemon(const Graph& g);
/// The 2-fair adaptive 3-block daemon on K3. Starts at node `start`.
SchedulerPtr k3_adaptive_daemon(const Graph& g, std::uint64_t seed, Vertex start = 0);

/// Builds a scheduler from a textual spec such as "random-edge",
/// "periodic-node:p3", "constant-edge:0", "k3-adaptive" or "file:PATH".
SchedulerPtr make_scheduler(const Graph& g, std::string_view spec, std::uint64_t seed);
std::vector<std::string> scheduler_spec_names();

// -- node permutation families --------------------------------------------------

enum class PermFamily { kIdentity, kTimesThree, kPattern13, kRandom };
PermFamily parse_perm_family(std::string_view name);
std::string_view perm_family_name(PermFamily f);
/// id: 0..n-1; p3: i -> 3i mod n (needs gcd(3,n)=1); pattern13: 0,2,1,3,
/// 4,6,5,7,...; random: uniform shuffle drawn from rng.
std::vector<Vertex> node_permutation(PermFamily family, Vertex n, Rng* rng = nullptr);

// -- fairness -------------------------------------------------------------------

struct FairnessReport {
  /// Max number of times any single other vertex occurs strictly between
  /// two consecutive occurrences of v; empty when v occurs fewer than twice.
  std::vector<std::optional<std::size_t>> per_vertex;
  std::size_t b = 0;  // max over vertices with a defined count
  std::vector<Vertex> under_scheduled;  // occurred fewer than twice
  std::size_t steps = 0;

  bool all_rescheduled() const { return under_scheduled.empty(); }
};

FairnessReport fairness_monitor(std::span<const Vertex> trace, Vertex n);
/// Edge traces: a vertex occurs at a step when the played edge contains it.
FairnessReport fairness_monitor_edges(const Graph& g, std::span<const EdgeId> trace);

/// Random node trace in which no vertex occurs more than b times between two
/// consecutive occurrences of another (the start counts as an occurrence of
/// every vertex). Every window of b(n-1)+1 steps contains every vertex.
std::vector<Vertex> random_bfair_trace(Vertex n, unsigned b, std::size_t length, Rng& rng);

// -- constructions ----------------------------------------------------------------

/// Closed edge walk in which cyclically consecutive edges share exactly one
/// vertex and every edge occurs once or twice. Needs a connected graph with
/// m >= 2.
std::vector<EdgeId> construct_2fair_enumeration(const Graph& g);

struct OneFairConstruction {
  OneFairClass cls = OneFairClass::kNone;
  std::vector<EdgeId> order;
  std::vector<std::uint32_t> labeling;
  bool nilpotent = true;
  int trace_parity = 0;
  std::optional<int> s2_parity;  // computed for trees
  std::string method;
};

/// Fixed edge permutation whose schedule matrix is not nilpotent, for graphs
/// in G1, G2 or G3. Fails with kUnsupported outside those classes and with
/// kInternal if the result does not validate.
OneFairConstruction construct_1fair_nonnilpotent(const Graph& g);

struct StarSchedule {
  std::vector<Vertex> period;
  Configuration x0;
};

/// Periodic 3-fair node sequence on K_{1,n} (center 0, leaves 1..n), with the
/// initial configuration it cycles through. Needs n >= 5.
StarSchedule star_3fair_schedule(Vertex leaves);

// -- schedule files -----------------------------------------------------------------

/// One decision per line: "E u v" or "N u".
std::string format_schedule(const Graph& g, std::span<const SchedulerDecision> decisions);
std::vector<SchedulerDecision> parse_schedule(const Graph& g, std::string_view text);

}  // namespace pavlov
