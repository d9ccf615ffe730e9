#include "pavlov/graph.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <queue>
#include <sstream>

#include "pavlov/rng.hpp"

namespace pavlov {

Graph::Graph(Vertex n) : n_(n), adj_(n), adj_edge_(n) {}

Graph::Graph(Vertex n, std::vector<Edge> edges) : Graph(n) {
  edges_.reserve(edges.size());
  for (Edge e : edges) {
    if (e.u == e.v) fail(ErrorCode::kInvalidArgument, "self-loop at vertex " + std::to_string(e.u));
    if (e.u >= n || e.v >= n) {
      fail(ErrorCode::kInvalidArgument, "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                            ") has an endpoint >= n=" + std::to_string(n));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    edges_.push_back(e);
  }
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    adj_[edges_[id].u].push_back(edges_[id].v);
    adj_[edges_[id].v].push_back(edges_[id].u);
    adj_edge_[edges_[id].u].push_back(id);
    adj_edge_[edges_[id].v].push_back(id);
  }
  for (Vertex v = 0; v < n_; ++v) {
    std::vector<std::size_t> order(adj_[v].size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return adj_[v][a] < adj_[v][b]; });
    std::vector<Vertex> nb(order.size());
    std::vector<EdgeId> ids(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      nb[i] = adj_[v][order[i]];
      ids[i] = adj_edge_[v][order[i]];
      if (i > 0 && nb[i] == nb[i - 1]) {
        fail(ErrorCode::kInvalidArgument,
             "duplicate edge (" + std::to_string(v) + "," + std::to_string(nb[i]) + ")");
      }
    }
    adj_[v] = std::move(nb);
    adj_edge_[v] = std::move(ids);
  }
}

std::optional<EdgeId> Graph::find_edge(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) return std::nullopt;
  const auto& nb = adj_[u];
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return std::nullopt;
  return adj_edge_[u][static_cast<std::size_t>(it - nb.begin())];
}

// ---------------------------------------------------------------------------

Family parse_family(std::string_view name) {
  if (name == "line" || name == "path") return Family::kLine;
  if (name == "cycle") return Family::kCycle;
  if (name == "star") return Family::kStar;
  if (name == "complete") return Family::kComplete;
  if (name == "k4") return Family::kK4;
  if (name == "k3-merge" || name == "k3merge") return Family::kK3Merge;
  fail(ErrorCode::kInvalidArgument, "unknown graph family '" + std::string(name) + "'");
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::kLine: return "line";
    case Family::kCycle: return "cycle";
    case Family::kStar: return "star";
    case Family::kComplete: return "complete";
    case Family::kK4: return "k4";
    case Family::kK3Merge: return "k3-merge";
  }
  return "?";
}

Graph generate(Family family, Vertex n) {
  std::vector<Edge> edges;
  switch (family) {
    case Family::kLine:
      require(n >= 1, "line needs n >= 1");
      for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
      return Graph(n, std::move(edges));
    case Family::kCycle:
      require(n >= 3, "cycle needs n >= 3");
      for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
      edges.push_back({0, n - 1});
      return Graph(n, std::move(edges));
    case Family::kStar:
      require(n >= 1, "star needs at least one leaf");
      for (Vertex i = 1; i <= n; ++i) edges.push_back({0, i});
      return Graph(n + 1, std::move(edges));
    case Family::kComplete:
      require(n >= 1, "complete graph needs n >= 1");
      for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) edges.push_back({i, j});
      return Graph(n, std::move(edges));
    case Family::kK4:
      return generate(Family::kComplete, 4);
    case Family::kK3Merge:
      // triangles {0,1,2} and {0,1,3} glued along (0,1)
      return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}});
  }
  fail(ErrorCode::kInvalidArgument, "unknown family");
}

Graph sample_gnp(Vertex n, double p, std::uint64_t seed) {
  require(p >= 0.0 && p <= 1.0, "p must lie in [0,1]");
  std::vector<Edge> edges;
  std::uint64_t counter = 0;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j, ++counter) {
      if (counter_uniform(seed, counter) < p) edges.push_back({i, j});
    }
  }
  return Graph(n, std::move(edges));
}

// -- text format --------------------------------------------------------------

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& msg) {
  fail(ErrorCode::kParse, "line " + std::to_string(line) + ": " + msg);
}

std::vector<std::uint64_t> parse_numbers(std::string_view s, std::size_t line) {
  std::vector<std::uint64_t> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
      parse_fail(line, "expected a non-negative integer, got '" + tok + "'");
    try {
      out.push_back(std::stoull(tok));
    } catch (const std::exception&) {
      parse_fail(line, "integer out of range: '" + tok + "'");
    }
  }
  return out;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::size_t line_no = 0;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> header;
  std::vector<Edge> edges;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto nums = parse_numbers(line, line_no);
    if (!header) {
      if (nums.size() != 2) parse_fail(line_no, "header must be \"n m\"");
      if (nums[0] > 0xffffffffULL) parse_fail(line_no, "vertex count too large");
      header = {nums[0], nums[1]};
      continue;
    }
    if (nums.size() != 2) parse_fail(line_no, "edge line must be \"u v\"");
    if (edges.size() == header->second) parse_fail(line_no, "more edge lines than the declared m");
    if (nums[0] >= header->first || nums[1] >= header->first)
      parse_fail(line_no, "endpoint out of range for n=" + std::to_string(header->first));
    if (nums[0] == nums[1]) parse_fail(line_no, "self-loop");
    edges.push_back({static_cast<Vertex>(nums[0]), static_cast<Vertex>(nums[1])});
  }
  if (!header) parse_fail(line_no, "missing \"n m\" header");
  if (edges.size() != header->second)
    parse_fail(line_no, "expected " + std::to_string(header->second) + " edges, found " + std::to_string(edges.size()));
  try {
    return Graph(static_cast<Vertex>(header->first), std::move(edges));
  } catch (const Error& e) {
    fail(ErrorCode::kParse, e.what());
  }
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kNotFound, "cannot open graph file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_graph(ss.str());
  } catch (const Error& e) {
    fail(e.code(), path + ": " + e.what());
  }
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

// -- connectivity ---------------------------------------------------------------

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> comps;
  std::vector<bool> seen(g.vertex_count(), false);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    comps.emplace_back();
    std::vector<Vertex> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      comps.back().push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comps.back().begin(), comps.back().end());
  }
  return comps;
}

bool is_connected(const Graph& g) { return g.vertex_count() > 0 && connected_components(g).size() == 1; }

bool is_tree(const Graph& g) { return is_connected(g) && g.edge_count() + 1 == g.vertex_count(); }

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> local(g.vertex_count(), kNoVertex);
  InducedSubgraph out;
  out.to_parent.assign(vertices.begin(), vertices.end());
  for (Vertex i = 0; i < out.to_parent.size(); ++i) {
    require(out.to_parent[i] < g.vertex_count(), "induced_subgraph: vertex out of range");
    require(local[out.to_parent[i]] == kNoVertex, "induced_subgraph: repeated vertex");
    local[out.to_parent[i]] = i;
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (local[e.u] != kNoVertex && local[e.v] != kNoVertex) edges.push_back({local[e.u], local[e.v]});
  }
  out.graph = Graph(static_cast<Vertex>(out.to_parent.size()), std::move(edges));
  return out;
}

// -- trees ----------------------------------------------------------------------

RootedTree root_tree(const Graph& tree, Vertex root) {
  require(root < tree.vertex_count(), "root out of range");
  if (!is_tree(tree)) fail(ErrorCode::kInvalidArgument, "root_tree: input is not a tree");
  RootedTree t;
  t.tree = tree;
  t.root = root;
  t.parent.assign(tree.vertex_count(), kNoVertex);
  t.children.assign(tree.vertex_count(), {});
  std::vector<bool> seen(tree.vertex_count(), false);
  std::queue<Vertex> q;
  q.push(root);
  seen[root] = true;
  while (!q.empty()) {
    const Vertex v = q.front();
    q.pop();
    for (Vertex w : tree.neighbors(v)) {
      if (seen[w]) continue;
      seen[w] = true;
      t.parent[w] = v;
      t.children[v].push_back(w);
      q.push(w);
    }
  }
  return t;
}

RootedTree spanning_tree(const Graph& g, Vertex root) {
  require(root < g.vertex_count(), "spanning_tree: root out of range");
  if (!is_connected(g)) fail(ErrorCode::kInvalidArgument, "spanning_tree: graph is disconnected");
  const Vertex n = g.vertex_count();
  std::vector<Vertex> parent(n, kNoVertex);
  std::vector<bool> seen(n, false);
  std::vector<Edge> tree_edges;
  // (vertex, index of next neighbor to try)
  std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
  seen[root] = true;
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    const auto nb = g.neighbors(v);
    while (next < nb.size() && seen[nb[next]]) ++next;
    if (next == nb.size()) {
      stack.pop_back();
      continue;
    }
    const Vertex w = nb[next++];
    seen[w] = true;
    parent[w] = v;
    tree_edges.push_back({v, w});
    stack.push_back({w, 0});
  }
  RootedTree t;
  t.tree = Graph(n, std::move(tree_edges));
  t.root = root;
  t.parent = std::move(parent);
  t.children.assign(n, {});
  for (Vertex v = 0; v < n; ++v)
    if (t.parent[v] != kNoVertex) t.children[t.parent[v]].push_back(v);
  return t;
}

// -- matchings --------------------------------------------------------------------

std::vector<Vertex> Matching::mates(Vertex n) const {
  std::vector<Vertex> mate(n, kNoVertex);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) fail(ErrorCode::kInvalidArgument, "matching edge out of range");
    mate[e.u] = e.v;
    mate[e.v] = e.u;
  }
  return mate;
}

bool Matching::is_valid_in(const Graph& g) const {
  std::vector<bool> used(g.vertex_count(), false);
  for (const Edge& e : edges) {
    if (!g.has_edge(e.u, e.v) || used[e.u] || used[e.v]) return false;
    used[e.u] = used[e.v] = true;
  }
  return true;
}

bool Matching::is_perfect_for(const Graph& g) const {
  return is_valid_in(g) && 2 * edges.size() == g.vertex_count();
}

namespace {

class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : g_(g), n_(static_cast<int>(g.vertex_count())), match_(n_, -1), parent_(n_), base_(n_), used_(n_), in_blossom_(n_) {}

  Matching run() {
    // greedy warm start keeps the search short on dense inputs
    for (const Edge& e : g_.edges()) {
      if (match_[e.u] == -1 && match_[e.v] == -1) {
        match_[e.u] = static_cast<int>(e.v);
        match_[e.v] = static_cast<int>(e.u);
      }
    }
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      int u = find_path(v);
      while (u != -1) {
        const int pv = parent_[u];
        const int ppv = match_[pv];
        match_[u] = pv;
        match_[pv] = u;
        u = ppv;
      }
    }
    Matching m;
    for (int v = 0; v < n_; ++v)
      if (match_[v] > v) m.edges.push_back({static_cast<Vertex>(v), static_cast<Vertex>(match_[v])});
    return m;
  }

 private:
  int lca(int a, int b) {
    std::vector<bool> seen(n_, false);
    while (true) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_path(int root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    std::iota(base_.begin(), base_.end(), 0);
    used_[root] = true;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (Vertex tv : g_.neighbors(static_cast<Vertex>(v))) {
        const int to = static_cast<int>(tv);
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          const int cur = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = true;
                q.push(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = true;
          q.push(match_[to]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  std::vector<int> match_, parent_, base_;
  std::vector<bool> used_, in_blossom_;
};

}  // namespace

Matching maximum_matching(const Graph& g) { return Blossom(g).run(); }

std::optional<Matching> perfect_matching(const Graph& g) {
  if (g.vertex_count() % 2 != 0) return std::nullopt;
  Matching m = maximum_matching(g);
  if (2 * m.edges.size() != g.vertex_count()) return std::nullopt;
  return m;
}

// -- star decomposition ---------------------------------------------------------------

StarDecomposition star_decomposition(const RootedTree& t) {
  const Vertex n = t.tree.vertex_count();
  if (n < 2) fail(ErrorCode::kInvalidArgument, "star_decomposition: a single vertex cannot be covered by a star");
  StarDecomposition d;
  std::vector<std::size_t> star_of(n, SIZE_MAX);
  std::vector<Vertex> stranded;
  std::queue<Vertex> roots;
  roots.push(t.root);
  while (!roots.empty()) {
    const Vertex s = roots.front();
    roots.pop();
    if (t.children[s].empty()) {
      stranded.push_back(s);
      continue;
    }
    const std::size_t id = d.stars.size();
    d.stars.push_back({s, t.children[s]});
    star_of[s] = id;
    for (Vertex c : t.children[s]) {
      star_of[c] = id;
      for (Vertex gc : t.children[c]) roots.push(gc);
    }
  }
  for (Vertex v : stranded) {
    const Vertex p = t.parent[v];
    Star& host = d.stars[star_of[p]];
    if (host.center == p) {
      host.leaves.push_back(v);
      star_of[v] = star_of[p];
    } else if (host.leaves.size() == 1) {
      // re-center the two-vertex star on p
      host.leaves = {host.center, v};
      host.center = p;
      star_of[v] = star_of[p];
    } else {
      host.leaves.erase(std::find(host.leaves.begin(), host.leaves.end(), p));
      star_of[p] = star_of[v] = d.stars.size();
      d.stars.push_back({p, {v}});
    }
  }
  for (Star& s : d.stars) std::sort(s.leaves.begin(), s.leaves.end());
  return d;
}

// -- L7 partition ------------------------------------------------------------------

namespace {

std::optional<L7Partition> partition_from_path(const Graph& g, const std::vector<Vertex>& path) {
  std::vector<bool> in_path(g.vertex_count(), false);
  for (Vertex v : path) in_path[v] = true;
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!in_path[v]) rest.push_back(v);
  const auto sub = induced_subgraph(g, rest);
  auto m = perfect_matching(sub.graph);
  if (!m) return std::nullopt;
  L7Partition out;
  out.path = path;
  out.rest = rest;
  for (const Edge& e : m->edges) {
    Edge h{sub.to_parent[e.u], sub.to_parent[e.v]};
    if (h.u > h.v) std::swap(h.u, h.v);
    out.matching.edges.push_back(h);
  }
  return out;
}

std::optional<L7Partition> pendant_construction(const Graph& g) {
  const Vertex n = g.vertex_count();
  for (Vertex x0 = 0; x0 < n; ++x0) {
    if (g.degree(x0) != 1) continue;
    std::vector<Vertex> others;
    for (Vertex v = 0; v < n; ++v)
      if (v != x0) others.push_back(v);
    const auto h = induced_subgraph(g, others);
    const auto m = perfect_matching(h.graph);
    if (!m) continue;
    std::vector<Vertex> mate(n, kNoVertex);
    for (const Edge& e : m->edges) {
      mate[h.to_parent[e.u]] = h.to_parent[e.v];
      mate[h.to_parent[e.v]] = h.to_parent[e.u];
    }
    const Vertex x1 = g.neighbors(x0)[0];
    const Vertex x2 = mate[x1];
    for (Vertex x3 : g.neighbors(x2)) {
      if (x3 == x0 || x3 == x1) continue;
      const Vertex x4 = mate[x3];
      for (Vertex x5 : g.neighbors(x4)) {
        if (x5 == x0 || x5 == x1 || x5 == x2 || x5 == x3) continue;
        const Vertex x6 = mate[x5];
        L7Partition out;
        out.path = {x0, x1, x2, x3, x4, x5, x6};
        std::vector<bool> in_path(n, false);
        for (Vertex v : out.path) in_path[v] = true;
        for (Vertex v = 0; v < n; ++v)
          if (!in_path[v]) out.rest.push_back(v);
        for (Vertex v : out.rest)
          if (mate[v] > v) out.matching.edges.push_back({v, mate[v]});
        out.via_degree_one = true;
        return out;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<L7Partition> find_l7_partition(const Graph& g, std::uint64_t path_budget) {
  if (g.vertex_count() < 7) return std::nullopt;
  if (g.vertex_count() % 2 == 0) return std::nullopt;  // remainder would be odd
  if (auto p = pendant_construction(g)) return p;

  std::uint64_t candidates = 0;
  std::vector<Vertex> path;
  std::vector<bool> on_path(g.vertex_count(), false);
  std::optional<L7Partition> found;
  std::function<bool(Vertex)> extend = [&](Vertex v) -> bool {
    path.push_back(v);
    on_path[v] = true;
    bool done = false;
    if (path.size() == 7) {
      // each undirected path is met twice; only test one orientation
      if (path.front() < path.back()) {
        ++candidates;
        found = partition_from_path(g, path);
        done = found.has_value() || candidates >= path_budget;
      }
    } else {
      for (Vertex w : g.neighbors(v)) {
        if (on_path[w]) continue;
        if (extend(w)) {
          done = true;
          break;
        }
      }
    }
    on_path[v] = false;
    path.pop_back();
    return done;
  };
  for (Vertex s = 0; s < g.vertex_count() && !found && candidates < path_budget; ++s) extend(s);
  return found;
}

StructureReport detect_structures(const Graph& g) {
  StructureReport r;
  const Vertex n = g.vertex_count();
  std::vector<Vertex> pendant;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == 0) r.isolated_vertices.push_back(v);
    if (g.degree(v) == 1) pendant.push_back(v);
  }
  for (std::size_t i = 0; i < pendant.size(); ++i) {
    for (std::size_t j = i + 1; j < pendant.size(); ++j) {
      const Vertex a = pendant[i], b = pendant[j];
      const Vertex na = g.neighbors(a)[0], nb = g.neighbors(b)[0];
      if (na == nb) r.has_cherry = true;
      if (na == b || nb == a || na == nb) continue;
      for (Vertex mid : g.neighbors(na)) {
        if (mid == a || mid == b || mid == nb) continue;
        if (g.has_edge(mid, nb)) {
          r.has_deg1_path5 = true;
          break;
        }
      }
    }
  }
  return r;
}

// -- long cycles -----------------------------------------------------------------

namespace {

/// Largest biconnected block size (in vertices), via Tarjan's edge stack.
std::size_t largest_block(const Graph& g) {
  const Vertex n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<EdgeId> edge_stack;
  std::size_t best = 0;
  int timer = 0;
  std::vector<int> mark(n, -1);
  int block_id = 0;
  auto pop_block = [&](EdgeId until) {
    std::size_t count = 0;
    while (true) {
      const EdgeId e = edge_stack.back();
      edge_stack.pop_back();
      for (Vertex w : {g.edge(e).u, g.edge(e).v}) {
        if (mark[w] != block_id) {
          mark[w] = block_id;
          ++count;
        }
      }
      if (e == until) break;
    }
    ++block_id;
    best = std::max(best, count);
  };
  std::function<void(Vertex, EdgeId)> dfs = [&](Vertex v, EdgeId via) {
    disc[v] = low[v] = timer++;
    const auto nb = g.neighbors(v);
    const auto ids = g.incident_edges(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      const Vertex w = nb[i];
      const EdgeId e = ids[i];
      if (e == via) continue;
      if (disc[w] == -1) {
        edge_stack.push_back(e);
        dfs(w, e);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) pop_block(e);
      } else if (disc[w] < disc[v]) {
        edge_stack.push_back(e);
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  for (Vertex s = 0; s < n; ++s)
    if (disc[s] == -1) dfs(s, ~EdgeId{0});
  return best;
}

}  // namespace

bool has_long_cycle(const Graph& g) { return largest_block(g) >= 4; }

std::optional<LongCycleCore> find_long_cycle_core(const Graph& g) {
  if (!has_long_cycle(g)) return std::nullopt;
  std::vector<Vertex> keep(g.vertex_count());
  std::iota(keep.begin(), keep.end(), 0);
  // removing vertices never creates a long cycle, so one pass reaches a
  // vertex-minimal set
  for (Vertex v = g.vertex_count(); v-- > 0;) {
    std::vector<Vertex> trial;
    for (Vertex w : keep)
      if (w != v) trial.push_back(w);
    if (has_long_cycle(induced_subgraph(g, trial).graph)) keep = std::move(trial);
  }
  const auto core = induced_subgraph(g, keep);
  LongCycleCore out;
  out.vertices = keep;
  const Vertex k = core.graph.vertex_count();
  std::vector<Vertex> order;
  if (k == 4 && core.graph.edge_count() > 4) {
    std::vector<Vertex> perm{0, 1, 2, 3};
    do {
      if (perm[0] != 0) break;
      bool ok = true;
      for (int i = 0; i < 4 && ok; ++i) ok = core.graph.has_edge(perm[i], perm[(i + 1) % 4]);
      if (ok) {
        order = perm;
        break;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  } else {
    Vertex prev = kNoVertex, cur = 0;
    for (Vertex step = 0; step < k; ++step) {
      order.push_back(cur);
      const auto nb = core.graph.neighbors(cur);
      const Vertex next = nb[0] != prev ? nb[0] : nb[1];
      prev = cur;
      cur = next;
    }
  }
  if (order.size() != k) fail(ErrorCode::kInternal, "long cycle core has no spanning cycle");
  for (Vertex v : order) out.cycle.push_back(core.to_parent[v]);
  return out;
}

std::size_t count_triangles(const Graph& g) {
  std::size_t t = 0;
  for (const Edge& e : g.edges())
    for (Vertex w : g.neighbors(e.v))
      if (w > e.v && g.has_edge(e.u, w)) ++t;
  return t;
}

std::string_view class_name(OneFairClass c) {
  switch (c) {
    case OneFairClass::kG1: return "G1";
    case OneFairClass::kG2: return "G2";
    case OneFairClass::kG3: return "G3";
    case OneFairClass::kNone: return "none";
  }
  return "?";
}

OneFairClass classify_for_theorem3(const Graph& g) {
  if (!is_connected(g)) fail(ErrorCode::kInvalidArgument, "classify: graph is disconnected");
  require(g.edge_count() >= 2, "classify: need at least two edges");
  if (has_long_cycle(g)) return OneFairClass::kG1;
  if (g.edge_count() % 2 == 0) return OneFairClass::kG2;
  if (is_tree(g) && g.vertex_count() % 4 == 0) return OneFairClass::kG3;
  return OneFairClass::kNone;
}

}  // namespace pavlov
