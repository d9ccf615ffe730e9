#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pavlov/common.hpp"

namespace pavlov {

/// Undirected simple graph on vertices 0..n-1. The edge index of an edge is
/// its position in `edges()`. Immutable after construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(Vertex n);
  /// Validates (no loops, no duplicates, endpoints < n) and canonicalizes
  /// every pair to u < v. Edge order is preserved.
  Graph(Vertex n, std::vector<Edge> edges);

  Vertex vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }

  /// Neighbors of v in ascending order.
  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  /// Edge ids parallel to `neighbors(v)`.
  std::span<const EdgeId> incident_edges(Vertex v) const { return adj_edge_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }

  std::optional<EdgeId> find_edge(Vertex u, Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const { return find_edge(u, v).has_value(); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  Vertex n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::vector<EdgeId>> adj_edge_;
};

enum class Family { kLine, kCycle, kStar, kComplete, kK4, kK3Merge };

Family parse_family(std::string_view name);
std::string_view family_name(Family f);

/// Canonically numbered family member. For kStar, n is the leaf count
/// (center 0, leaves 1..n). kK4 and kK3Merge ignore n.
Graph generate(Family family, Vertex n = 0);

/// G(n,p) with pairs visited lexicographically and one counter-based
/// uniform per pair, so a (n, p, seed) triple names the same graph on every
/// platform.
Graph sample_gnp(Vertex n, double p, std::uint64_t seed);

/// "n m" header, then m lines "u v"; '#' starts a comment line.
Graph parse_graph(std::string_view text);
Graph load_graph(const std::string& path);
std::string format_graph(const Graph& g);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;  // local vertex -> vertex of the host graph
};
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

// -- trees -------------------------------------------------------------------

inline constexpr Vertex kNoVertex = ~Vertex{0};

struct RootedTree {
  Graph tree;
  Vertex root = 0;
  std::vector<Vertex> parent;                 // kNoVertex for the root
  std::vector<std::vector<Vertex>> children;  // ascending
};

RootedTree root_tree(const Graph& tree, Vertex root);

/// Depth-first spanning tree; children explored in ascending index order.
RootedTree spanning_tree(const Graph& g, Vertex root);

// -- matchings ---------------------------------------------------------------

struct Matching {
  std::vector<Edge> edges;

  /// mate[v] per vertex, kNoVertex when uncovered.
  std::vector<Vertex> mates(Vertex n) const;
  bool is_valid_in(const Graph& g) const;
  bool is_perfect_for(const Graph& g) const;
};

/// Maximum cardinality matching of a general graph (Edmonds' blossom
/// algorithm). Deterministic for a fixed graph.
Matching maximum_matching(const Graph& g);
std::optional<Matching> perfect_matching(const Graph& g);

// -- decompositions ----------------------------------------------------------

struct Star {
  Vertex center = 0;
  std::vector<Vertex> leaves;
};

struct StarDecomposition {
  std::vector<Star> stars;
};

/// Recursive root-and-children peel of a rooted tree into vertex-disjoint
/// stars. A vertex left isolated by the peel is attached to the star that
/// holds its parent: as a leaf when the parent is a center, otherwise the
/// parent becomes the center of a star containing it (taking its old center
/// along when that star had a single leaf).
StarDecomposition star_decomposition(const RootedTree& t);

struct L7Partition {
  std::vector<Vertex> path;  // seven vertices forming a path, in path order
  std::vector<Vertex> rest;
  Matching matching;         // perfect on `rest`
  bool via_degree_one = false;
};

inline constexpr std::uint64_t kL7SearchBudget = 1'000'000;

/// Splits V into a 7-vertex path and a perfectly matchable remainder.
/// Tries the pendant-vertex construction first, then a bounded enumeration
/// of 7-vertex paths.
std::optional<L7Partition> find_l7_partition(const Graph& g,
                                             std::uint64_t path_budget = kL7SearchBudget);

struct StructureReport {
  bool has_cherry = false;
  bool has_deg1_path5 = false;
  std::vector<Vertex> isolated_vertices;
};

StructureReport detect_structures(const Graph& g);

// -- long cycles and the 1-fair classes ---------------------------------------

/// True iff g contains a cycle of length >= 4, i.e. some biconnected block
/// has at least four vertices.
bool has_long_cycle(const Graph& g);

/// Vertex-minimal induced subgraph that still contains a cycle of length
/// >= 4: a chordless cycle, K4 or two triangles sharing an edge. `cycle`
/// lists a spanning cycle of it in traversal order (host vertex ids).
struct LongCycleCore {
  std::vector<Vertex> vertices;
  std::vector<Vertex> cycle;
};
std::optional<LongCycleCore> find_long_cycle_core(const Graph& g);

std::size_t count_triangles(const Graph& g);

enum class OneFairClass { kG1, kG2, kG3, kNone };
std::string_view class_name(OneFairClass c);

OneFairClass classify_for_theorem3(const Graph& g);

}  // namespace pavlov
