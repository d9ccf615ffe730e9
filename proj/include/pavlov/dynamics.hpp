#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pavlov/graph.hpp"

namespace pavlov {

/// One 0/1 label per vertex, bit-packed. Text form is a '0'/'1' string with
/// vertex 0 leftmost.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(Vertex n) : n_(n), words_((n + 63) / 64, 0) {}

  /// Accepts an optional "0b" prefix.
  static Configuration parse(std::string_view text);
  /// Bit i of `mask` is the label of vertex i. Requires n <= 64.
  static Configuration from_mask(Vertex n, std::uint64_t mask);
  static Configuration single_one(Vertex n, Vertex v);
  static Configuration all_ones(Vertex n);

  Vertex size() const { return n_; }
  bool get(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
  void set(Vertex v, bool bit) {
    const std::uint64_t m = std::uint64_t{1} << (v & 63);
    words_[v >> 6] = bit ? (words_[v >> 6] | m) : (words_[v >> 6] & ~m);
  }
  bool is_zero() const;
  std::size_t popcount() const;
  /// Requires size() <= 64.
  std::uint64_t to_mask() const;
  std::string to_string() const;
  std::size_t hash() const;

  Configuration& operator^=(const Configuration& other);
  friend Configuration operator^(Configuration a, const Configuration& b) { return a ^= b; }
  friend bool operator==(const Configuration&, const Configuration&) = default;

  /// The Pavlov update in place: both endpoints take the XOR of their labels.
  void play(Vertex u, Vertex v) {
    const bool b = get(u) != get(v);
    set(u, b);
    set(v, b);
  }

  std::span<const std::uint64_t> words() const { return words_; }

 private:
  Vertex n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ConfigurationHash {
  std::size_t operator()(const Configuration& c) const { return c.hash(); }
};

Configuration step(const Graph& g, const Configuration& x, EdgeId e);
/// Looks the pair up in g; fails when (u,v) is not an edge.
Configuration step(const Graph& g, const Configuration& x, Vertex u, Vertex v);

struct StepRecord {
  std::size_t time = 0;  // 1-based index of the step that produced `after`
  EdgeId edge = 0;
  Configuration after;
};

/// Supplies the next edge given the current configuration; std::nullopt
/// ends the schedule.
using EdgeStream = std::function<std::optional<EdgeId>(const Configuration&)>;

struct RunResult {
  Configuration final_config;
  std::size_t steps = 0;
  bool reached_zero = false;
  bool schedule_exhausted = false;
  std::vector<StepRecord> trajectory;  // filled only when requested
};

RunResult run(const Graph& g, const Configuration& x0, const EdgeStream& schedule, std::size_t max_steps,
              bool record_trajectory = false);
RunResult run(const Graph& g, const Configuration& x0, std::span<const EdgeId> schedule, std::size_t max_steps,
              bool record_trajectory = false);

/// Default step budget for stochastic runs: 10^4 * n * ln(n+1).
std::size_t default_max_steps(Vertex n);

bool is_fixed_point(const Graph& g, const Configuration& x);

struct Predecessor {
  Configuration config;
  EdgeId edge = 0;
  friend bool operator==(const Predecessor&, const Predecessor&) = default;
};

/// Every (Y, e) with Y != x and step(g, Y, e) == x. Empty exactly when x is
/// a Garden of Eden configuration.
std::vector<Predecessor> predecessors(const Graph& g, const Configuration& x);

struct PeriodicOutcome {
  bool stabilizes = false;
  std::size_t steps = 0;          // steps until 0 was first reached (when it stabilizes)
  std::size_t transient = 0;      // periods before the boundary sequence cycles
  std::size_t cycle_length = 0;   // in periods; 1 with a zero boundary when it stabilizes
};

/// Runs `period` repeatedly. The configuration at period boundaries
/// follows a fixed map on a finite set, so this always terminates within
/// 2^n applications of the period.
PeriodicOutcome periodic_outcome(const Graph& g, const Configuration& x0, std::span<const EdgeId> period);

}  // namespace pavlov
