#include "pavlov/schedulers.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

#include "pavlov/gf2.hpp"

namespace pavlov {

Vertex Scheduler::random_partner(Vertex v) {
  const auto nb = graph_->neighbors(v);
  if (nb.empty()) fail(ErrorCode::kInvalidArgument, "scheduled node " + std::to_string(v) + " has no neighbors");
  if (nb.size() == 1) return nb[0];
  return nb[rng_.below(nb.size())];
}

EdgeId Scheduler::advance(Configuration& x) {
  const SchedulerDecision d = next(x);
  EdgeId e = d.edge;
  if (d.kind == DaemonKind::kNode) e = *graph_->find_edge(d.node, random_partner(d.node));
  x.play(graph_->edge(e).u, graph_->edge(e).v);
  return e;
}

namespace {

std::shared_ptr<const Graph> share(const Graph& g) { return std::make_shared<const Graph>(g); }

class RandomEdgeScheduler final : public Scheduler {
 public:
  RandomEdgeScheduler(std::shared_ptr<const Graph> g, std::uint64_t seed) : Scheduler(std::move(g), seed) {
    if (graph_->edge_count() == 0) fail(ErrorCode::kInvalidArgument, "random edge scheduler needs an edge");
  }
  DaemonKind kind() const override { return DaemonKind::kEdge; }
  bool deterministic() const override { return false; }
  SchedulerDecision next(const Configuration&) override {
    return SchedulerDecision::of_edge(static_cast<EdgeId>(rng_.below(graph_->edge_count())));
  }
  std::unique_ptr<Scheduler> clone() const override { return std::make_unique<RandomEdgeScheduler>(*this); }
  std::uint64_t state_key() const override { return 0; }
  std::string describe() const override { return "random-edge"; }
};

class RandomNodeScheduler final : public Scheduler {
 public:
  RandomNodeScheduler(std::shared_ptr<const Graph> g, std::uint64_t seed) : Scheduler(std::move(g), seed) {
    for (Vertex v = 0; v < graph_->vertex_count(); ++v)
      if (graph_->degree(v) > 0) active_.push_back(v);
    if (active_.empty()) fail(ErrorCode::kInvalidArgument, "random node scheduler needs an edge");
  }
  DaemonKind kind() const override { return DaemonKind::kNode; }
  bool deterministic() const override { return false; }
  SchedulerDecision next(const Configuration&) override {
    return SchedulerDecision::of_node(active_[rng_.below(active_.size())]);
  }
  std::unique_ptr<Scheduler> clone() const override { return std::make_unique<RandomNodeScheduler>(*this); }
  std::uint64_t state_key() const override { return 0; }
  std::string describe() const override { return "random-node"; }

 private:
  std::vector<Vertex> active_;
};

class SequenceScheduler final : public Scheduler {
 public:
  SequenceScheduler(std::shared_ptr<const Graph> g, DaemonKind kind, std::vector<std::uint32_t> seq,
                    std::uint64_t seed, std::optional<unsigned> bound, std::string label)
      : Scheduler(std::move(g), seed), kind_(kind), seq_(std::move(seq)), bound_(bound), label_(std::move(label)) {
    require(!seq_.empty(), "periodic schedule must be nonempty");
    for (auto s : seq_) {
      if (kind_ == DaemonKind::kEdge) {
        require(s < graph_->edge_count(), "scheduled edge index out of range");
      } else {
        require(s < graph_->vertex_count(), "scheduled node out of range");
        require(graph_->degree(s) > 0, "scheduled node " + std::to_string(s) + " is isolated");
      }
    }
  }
  DaemonKind kind() const override { return kind_; }
  SchedulerDecision next(const Configuration&) override {
    const auto s = seq_[pos_];
    pos_ = (pos_ + 1) % seq_.size();
    return kind_ == DaemonKind::kEdge ? SchedulerDecision::of_edge(s) : SchedulerDecision::of_node(s);
  }
  std::unique_ptr<Scheduler> clone() const override { return std::make_unique<SequenceScheduler>(*this); }
  std::uint64_t state_key() const override { return pos_; }
  std::optional<unsigned> fairness_bound() const override { return bound_; }
  std::string describe() const override { return label_; }

 private:
  DaemonKind kind_;
  std::vector<std::uint32_t> seq_;
  std::size_t pos_ = 0;
  std::optional<unsigned> bound_;
  std::string label_;
};

class Theorem1Scheduler final : public Scheduler {
 public:
  explicit Theorem1Scheduler(std::shared_ptr<const Graph> g) : Scheduler(std::move(g), 0) {
    if (graph_->edge_count() == 0) fail(ErrorCode::kInvalidArgument, "stabilizing daemon needs an edge");
  }
  DaemonKind kind() const override { return DaemonKind::kEdge; }
  SchedulerDecision next(const Configuration&) override {
    const std::size_t m = graph_->edge_count();
    const auto e = static_cast<EdgeId>(std::min(pos_ / 2, m - 1));
    if (pos_ < 2 * m) ++pos_;
    return SchedulerDecision::of_edge(e);
  }
  std::unique_ptr<Scheduler> clone() const override { return std::make_unique<Theorem1Scheduler>(*this); }
  std::uint64_t state_key() const override { return pos_; }
  std::string describe() const override { return "theorem1"; }

 private:
  std::size_t pos_ = 0;
};

class K3AdaptiveScheduler final : public Scheduler {
 public:
  K3AdaptiveScheduler(std::shared_ptr<const Graph> g, std::uint64_t seed, Vertex start)
      : Scheduler(std::move(g), seed), start_(start) {
    if (graph_->vertex_count() != 3 || graph_->edge_count() != 3)
      fail(ErrorCode::kInvalidArgument, "k3 adaptive daemon only runs on K3");
    require(start < 3, "start node out of range");
  }
  DaemonKind kind() const override { return DaemonKind::kNode; }
  bool adaptive() const override { return true; }
  std::optional<unsigned> fairness_bound() const override { return 2; }

  SchedulerDecision next(const Configuration& x) override {
    require(x.size() == 3, "k3 adaptive daemon: configuration must have 3 labels");
    Vertex v = 0;
    switch (pos_) {
      case 0:
        if (x.popcount() != 3) fail(ErrorCode::kInvalidArgument, "k3 adaptive daemon: block must start at all-ones");
        v = start_;
        break;
      case 1:
        v = unique_with_label(x, true);
        break;
      default:
        v = unique_with_label(x, false);
        break;
    }
    block_[pos_] = v;
    if (pos_ == 2) {
      // a permutation block keeps its start; otherwise start at the missing node
      if (block_[0] != block_[1] && block_[1] != block_[2] && block_[0] != block_[2]) {
        start_ = block_[0];
      } else {
        start_ = static_cast<Vertex>(3 - block_[0] - block_[1]);
      }
      pos_ = 0;
    } else {
      ++pos_;
    }
    return SchedulerDecision::of_node(v);
  }
  std::unique_ptr<Scheduler> clone() const override { return std::make_unique<K3AdaptiveScheduler>(*this); }
  std::uint64_t state_key() const override { return start_ + 3 * pos_ + 9 * (pos_ == 2 ? block_[1] : 0); }
  std::string describe() const override { return "k3-adaptive"; }

 private:
  static Vertex unique_with_label(const Configuration& x, bool label) {
    Vertex found = kNoVertex;
    for (Vertex v = 0; v < 3; ++v) {
      if (x.get(v) != label) continue;
      if (found != kNoVertex) fail(ErrorCode::kInvalidArgument, "k3 adaptive daemon: configuration left the block cycle");
      found = v;
    }
    if (found == kNoVertex) fail(ErrorCode::kInvalidArgument, "k3 adaptive daemon: configuration left the block cycle");
    return found;
  }

  Vertex start_;
  std::size_t pos_ = 0;
  std::array<Vertex, 3> block_{};
};

void check_permutation(std::span<const std::uint32_t> perm, std::size_t size, const char* what) {
  std::vector<bool> seen(size, false);
  if (perm.size() != size) fail(ErrorCode::kInvalidArgument, std::string(what) + ": not a permutation (wrong length)");
  for (auto p : perm) {
    if (p >= size || seen[p]) fail(ErrorCode::kInvalidArgument, std::string(what) + ": not a permutation");
    seen[p] = true;
  }
}

}  // namespace

SchedulerPtr random_edge_scheduler(const Graph& g, std::uint64_t seed) {
  return std::make_unique<RandomEdgeScheduler>(share(g), seed);
}

SchedulerPtr random_node_scheduler(const Graph& g, std::uint64_t seed) {
  return std::make_unique<RandomNodeScheduler>(share(g), seed);
}

SchedulerPtr periodic_scheduler(const Graph& g, DaemonKind kind, std::vector<std::uint32_t> perm, std::uint64_t seed) {
  check_permutation(perm, kind == DaemonKind::kEdge ? g.edge_count() : g.vertex_count(), "periodic scheduler");
  const std::string label = kind == DaemonKind::kEdge ? "periodic-edge" : "periodic-node";
  return std::make_unique<SequenceScheduler>(share(g), kind, std::move(perm), seed, 1U, label);
}

SchedulerPtr sequence_scheduler(const Graph& g, DaemonKind kind, std::vector<std::uint32_t> sequence,
                                std::uint64_t seed, std::optional<unsigned> declared_bound, std::string label) {
  return std::make_unique<SequenceScheduler>(share(g), kind, std::move(sequence), seed, declared_bound,
                                             std::move(label));
}

SchedulerPtr degenerate_daemon(const Graph& g, DaemonKind kind, std::uint32_t target, std::uint64_t seed) {
  const std::string label = kind == DaemonKind::kEdge ? "constant-edge" : "constant-node";
  return std::make_unique<SequenceScheduler>(share(g), kind, std::vector<std::uint32_t>{target}, seed, std::nullopt,
                                             label);
}

SchedulerPtr theorem1_stabilizing_daemon(const Graph& g) { return std::make_unique<Theorem1Scheduler>(share(g)); }

SchedulerPtr k3_adaptive_daemon(const Graph& g, std::uint64_t seed, Vertex start) {
  return std::make_unique<K3AdaptiveScheduler>(share(g), seed, start);
}

// -- permutation families ------------------------------------------------------------

PermFamily parse_perm_family(std::string_view name) {
  if (name == "id") return PermFamily::kIdentity;
  if (name == "p3") return PermFamily::kTimesThree;
  if (name == "pattern13" || name == "(13)" || name == "13") return PermFamily::kPattern13;
  if (name == "random" || name == "rd") return PermFamily::kRandom;
  fail(ErrorCode::kInvalidArgument, "unknown permutation family '" + std::string(name) + "'");
}

std::string_view perm_family_name(PermFamily f) {
  switch (f) {
    case PermFamily::kIdentity: return "id";
    case PermFamily::kTimesThree: return "p3";
    case PermFamily::kPattern13: return "pattern13";
    case PermFamily::kRandom: return "random";
  }
  return "?";
}

std::vector<Vertex> node_permutation(PermFamily family, Vertex n, Rng* rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  switch (family) {
    case PermFamily::kIdentity:
      break;
    case PermFamily::kTimesThree:
      if (n % 3 == 0) fail(ErrorCode::kInvalidArgument, "p3 needs gcd(3,n)=1, n=" + std::to_string(n));
      for (Vertex i = 0; i < n; ++i) perm[i] = static_cast<Vertex>((3ULL * i) % n);
      break;
    case PermFamily::kPattern13:
      // 1-based 1,3,2,4 | 5,7,6,8 | ...
      for (Vertex k = 1; k + 1 < n; k += 4) std::swap(perm[k], perm[k + 1]);
      break;
    case PermFamily::kRandom:
      require(rng != nullptr, "random permutation needs a random stream");
      rng->shuffle(perm.begin(), perm.end());
      break;
  }
  return perm;
}

// -- spec parsing -----------------------------------------------------------------------

namespace {

std::vector<std::uint32_t> parse_u32_list(std::string_view s) {
  std::vector<std::uint32_t> out;
  while (!s.empty()) {
    const auto comma = s.find(',');
    const auto tok = s.substr(0, comma);
    std::uint32_t v = 0;
    const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size() || tok.empty())
      fail(ErrorCode::kParse, "bad integer '" + std::string(tok) + "' in list");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

std::uint32_t parse_u32(std::string_view s) {
  const auto list = parse_u32_list(s);
  if (list.size() != 1) fail(ErrorCode::kParse, "expected one integer, got '" + std::string(s) + "'");
  return list[0];
}

}  // namespace

SchedulerPtr make_scheduler(const Graph& g, std::string_view spec, std::uint64_t seed) {
  const auto colon = spec.find(':');
  const auto head = spec.substr(0, colon);
  const auto arg = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  if (head == "random-edge") return random_edge_scheduler(g, seed);
  if (head == "random-node") return random_node_scheduler(g, seed);
  if (head == "periodic-edge") {
    std::vector<std::uint32_t> perm(g.edge_count());
    std::iota(perm.begin(), perm.end(), 0);
    if (!arg.empty() && arg != "id") perm = parse_u32_list(arg);
    return periodic_scheduler(g, DaemonKind::kEdge, perm, seed);
  }
  if (head == "periodic-node") {
    std::vector<std::uint32_t> perm;
    if (arg.empty() || arg == "id" || arg == "p3" || arg == "pattern13" || arg == "(13)" || arg == "random" ||
        arg == "rd") {
      Rng rng(derive_seed(seed, 0x7065726dULL));
      perm = node_permutation(parse_perm_family(arg.empty() ? "id" : arg), g.vertex_count(), &rng);
    } else {
      perm = parse_u32_list(arg);
    }
    return periodic_scheduler(g, DaemonKind::kNode, perm, seed);
  }
  if (head == "constant-edge") return degenerate_daemon(g, DaemonKind::kEdge, parse_u32(arg), seed);
  if (head == "constant-node") return degenerate_daemon(g, DaemonKind::kNode, parse_u32(arg), seed);
  if (head == "theorem1") return theorem1_stabilizing_daemon(g);
  if (head == "two-fair") {
    auto seq = construct_2fair_enumeration(g);
    return sequence_scheduler(g, DaemonKind::kEdge, {seq.begin(), seq.end()}, seed, 2U, "two-fair");
  }
  if (head == "one-fair") {
    auto c = construct_1fair_nonnilpotent(g);
    return sequence_scheduler(g, DaemonKind::kEdge, {c.order.begin(), c.order.end()}, seed, 1U, "one-fair");
  }
  if (head == "star-3fair") {
    if (g.vertex_count() < 2 || g != generate(Family::kStar, g.vertex_count() - 1))
      fail(ErrorCode::kInvalidArgument, "star-3fair needs the canonical star graph");
    auto s = star_3fair_schedule(g.vertex_count() - 1);
    return sequence_scheduler(g, DaemonKind::kNode, {s.period.begin(), s.period.end()}, seed, 3U, "star-3fair");
  }
  if (head == "k3-adaptive") return k3_adaptive_daemon(g, seed, arg.empty() ? 0 : parse_u32(arg));
  if (head == "file") {
    std::ifstream in{std::string(arg)};
    if (!in) fail(ErrorCode::kNotFound, "cannot open schedule file '" + std::string(arg) + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    const auto decisions = parse_schedule(g, ss.str());
    if (decisions.empty()) fail(ErrorCode::kParse, "schedule file is empty");
    const DaemonKind kind = decisions.front().kind;
    std::vector<std::uint32_t> seq;
    for (const auto& d : decisions) {
      if (d.kind != kind) fail(ErrorCode::kParse, "schedule file mixes edge and node decisions");
      seq.push_back(kind == DaemonKind::kEdge ? d.edge : d.node);
    }
    return sequence_scheduler(g, kind, std::move(seq), seed, std::nullopt, "file");
  }
  fail(ErrorCode::kInvalidArgument, "unknown scheduler spec '" + std::string(spec) + "'");
}

std::vector<std::string> scheduler_spec_names() {
  return {"random-edge",      "random-node",     "periodic-edge[:id|e0,e1,...]",
          "periodic-node[:id|p3|pattern13|random|v0,v1,...]",        "constant-edge:E",
          "constant-node:V",  "theorem1",        "two-fair",
          "one-fair",         "star-3fair",      "k3-adaptive[:start]",
          "file:PATH"};
}

// -- fairness ---------------------------------------------------------------------------

namespace {

FairnessReport monitor_stages(std::size_t items, const std::vector<std::array<std::uint32_t, 2>>& stages,
                              std::size_t per_stage) {
  FairnessReport r;
  r.steps = stages.size();
  r.per_vertex.assign(items, std::nullopt);
  std::vector<std::size_t> count(items, 0), occurrences(items, 0);
  std::vector<std::vector<std::size_t>> snap(items);
  for (const auto& stage : stages) {
    for (std::size_t s = 0; s < per_stage; ++s) {
      const auto x = stage[s];
      if (occurrences[x] == 0) continue;
      std::size_t worst = 0;
      for (std::size_t y = 0; y < items; ++y)
        if (y != x) worst = std::max(worst, count[y] - snap[x][y]);
      r.per_vertex[x] = std::max(r.per_vertex[x].value_or(0), worst);
    }
    for (std::size_t s = 0; s < per_stage; ++s) ++count[stage[s]];
    for (std::size_t s = 0; s < per_stage; ++s) {
      snap[stage[s]] = count;
      ++occurrences[stage[s]];
    }
  }
  for (std::size_t x = 0; x < items; ++x) {
    if (occurrences[x] < 2) {
      r.under_scheduled.push_back(static_cast<Vertex>(x));
    } else {
      r.b = std::max(r.b, *r.per_vertex[x]);
    }
  }
  return r;
}

}  // namespace

FairnessReport fairness_monitor(std::span<const Vertex> trace, Vertex n) {
  require(!trace.empty(), "fairness_monitor: empty trace");
  std::vector<std::array<std::uint32_t, 2>> stages;
  stages.reserve(trace.size());
  for (Vertex v : trace) {
    require(v < n, "fairness_monitor: vertex out of range");
    stages.push_back({v, v});
  }
  return monitor_stages(n, stages, 1);
}

FairnessReport fairness_monitor_edges(const Graph& g, std::span<const EdgeId> trace) {
  require(!trace.empty(), "fairness_monitor: empty trace");
  std::vector<std::array<std::uint32_t, 2>> stages;
  stages.reserve(trace.size());
  for (EdgeId e : trace) {
    require(e < g.edge_count(), "fairness_monitor: edge out of range");
    stages.push_back({g.edge(e).u, g.edge(e).v});
  }
  return monitor_stages(g.vertex_count(), stages, 2);
}

std::vector<Vertex> random_bfair_trace(Vertex n, unsigned b, std::size_t length, Rng& rng) {
  require(n >= 1 && b >= 1, "random_bfair_trace needs n >= 1 and b >= 1");
  // since[x][y] = occurrences of y since x last occurred (start counts for all)
  std::vector<std::vector<unsigned>> since(n, std::vector<unsigned>(n, 0));
  std::vector<Vertex> trace;
  trace.reserve(length);
  std::vector<Vertex> allowed;
  while (trace.size() < length) {
    allowed.clear();
    for (Vertex y = 0; y < n; ++y) {
      bool ok = true;
      for (Vertex x = 0; x < n && ok; ++x) ok = x == y || since[x][y] < b;
      if (ok) allowed.push_back(y);
    }
    // the least recently scheduled vertex is always allowed
    const Vertex y = allowed[rng.below(allowed.size())];
    trace.push_back(y);
    for (Vertex x = 0; x < n; ++x) ++since[x][y];
    std::fill(since[y].begin(), since[y].end(), 0);
  }
  return trace;
}

// -- 2-fair closed walk --------------------------------------------------------------------

std::vector<EdgeId> construct_2fair_enumeration(const Graph& g) {
  if (!is_connected(g)) fail(ErrorCode::kInvalidArgument, "two-fair enumeration: graph is disconnected");
  if (g.edge_count() < 2) fail(ErrorCode::kInvalidArgument, "two-fair enumeration needs at least two edges");
  Vertex root = 0;
  for (Vertex v = 1; v < g.vertex_count(); ++v)
    if (g.degree(v) > g.degree(root)) root = v;
  const RootedTree t = spanning_tree(g, root);

  std::vector<bool> is_tree_edge(g.edge_count(), false);
  for (const Edge& e : t.tree.edges()) is_tree_edge[*g.find_edge(e.u, e.v)] = true;
  std::vector<bool> inserted(g.edge_count(), false);

  std::vector<EdgeId> walk;
  auto touch = [&](Vertex w) {
    const auto ids = g.incident_edges(w);
    for (EdgeId e : ids) {
      if (is_tree_edge[e] || inserted[e]) continue;
      inserted[e] = true;
      walk.push_back(e);
    }
  };
  // iterative form of F(v) = (v,c1) F(c1) (c1,v) (v,c2) F(c2) (c2,v) ...
  touch(root);
  std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    if (next == t.children[v].size()) {
      const Vertex done = v;
      stack.pop_back();
      if (!stack.empty()) walk.push_back(*g.find_edge(stack.back().first, done));
      continue;
    }
    const Vertex c = t.children[v][next++];
    walk.push_back(*g.find_edge(v, c));
    touch(c);
    stack.push_back({c, 0});
  }

  std::vector<EdgeId> out;
  for (EdgeId e : walk)
    if (out.empty() || out.back() != e) out.push_back(e);
  while (out.size() > 1 && out.back() == out.front()) out.pop_back();
  return out;
}

// -- non-nilpotent 1-fair orders --------------------------------------------------------------

namespace {

int trace_parity(const Gf2Matrix& m) {
  int t = 0;
  for (std::size_t i = 0; i < m.order(); ++i) t ^= m.get(i, i) ? 1 : 0;
  return t;
}

void finish(const Graph& g, OneFairConstruction& c) {
  c.labeling = labeling_from_order(c.order);
  const Gf2Matrix m = schedule_matrix(g, c.order);
  c.nilpotent = is_nilpotent(m);
  c.trace_parity = trace_parity(m);
  if (is_tree(g)) c.s2_parity = principal_minor_parity(integer_schedule_matrix(g, c.labeling), 2);
}

}  // namespace

OneFairConstruction construct_1fair_nonnilpotent(const Graph& g) {
  const OneFairClass cls = classify_for_theorem3(g);
  OneFairConstruction c;
  c.cls = cls;
  switch (cls) {
    case OneFairClass::kNone:
      fail(ErrorCode::kUnsupported, "graph is outside G1, G2 and G3; no 1-fair precluding schedule is constructed");
    case OneFairClass::kG1: {
      const auto core = find_long_cycle_core(g);
      if (!core) fail(ErrorCode::kInternal, "G1 graph without a long-cycle core");
      std::vector<bool> in_core(g.vertex_count(), false);
      for (Vertex v : core->vertices) in_core[v] = true;
      const std::size_t k = core->cycle.size();
      std::vector<EdgeId> cycle_edges;
      std::vector<bool> used(g.edge_count(), false);
      for (std::size_t i = 0; i < k; ++i) {
        const EdgeId e = *g.find_edge(core->cycle[i], core->cycle[(i + 1) % k]);
        cycle_edges.push_back(e);
        used[e] = true;
      }
      std::vector<EdgeId> chords, outside, crossing;
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (used[e]) continue;
        const int ends = static_cast<int>(in_core[g.edge(e).u]) + static_cast<int>(in_core[g.edge(e).v]);
        (ends == 2 ? chords : ends == 0 ? outside : crossing).push_back(e);
      }
      for (int variant = 0; variant < 2; ++variant) {
        std::vector<EdgeId> cyc = cycle_edges;
        if (variant == 1) std::swap(cyc[k - 2], cyc[k - 1]);  // labels 1..k-2, k, k-1
        c.order = cyc;
        c.order.insert(c.order.end(), chords.begin(), chords.end());
        c.order.insert(c.order.end(), outside.begin(), outside.end());
        c.order.insert(c.order.end(), crossing.begin(), crossing.end());
        finish(g, c);
        c.method = variant == 0 ? "long-cycle labeling 1..k" : "long-cycle labeling 1..k-2,k,k-1";
        if (!c.nilpotent) break;
      }
      break;
    }
    case OneFairClass::kG2: {
      c.order.resize(g.edge_count());
      std::iota(c.order.begin(), c.order.end(), 0);
      std::sort(c.order.begin(), c.order.end(), [&](EdgeId a, EdgeId b) {
        const Edge& x = g.edge(a);
        const Edge& y = g.edge(b);
        const auto sx = x.u + x.v, sy = y.u + y.v;
        if (sx != sy) return sx < sy;
        return x.u < y.u;
      });
      finish(g, c);
      c.method = "sum order";
      break;
    }
    case OneFairClass::kG3: {
      c.order.resize(g.edge_count());
      std::iota(c.order.begin(), c.order.end(), 0);
      finish(g, c);
      c.method = "edge index order (tree, s2 parity)";
      break;
    }
  }
  if (c.nilpotent) fail(ErrorCode::kInternal, "constructed 1-fair schedule is nilpotent; construction failed");
  return c;
}

StarSchedule star_3fair_schedule(Vertex leaves) {
  if (leaves < 5) fail(ErrorCode::kUnsupported, "3-fair star schedule needs at least 5 leaves");
  StarSchedule s;
  const Vertex n = leaves;
  s.period = {0, 1, 1};
  for (Vertex v = 3; v + 2 <= n; ++v) s.period.push_back(v);
  s.period.insert(s.period.end(), {2, 1, n - 1, n - 1});
  s.x0 = Configuration(n + 1);
  s.x0.set(1, true);
  s.x0.set(2, true);
  return s;
}

// -- schedule files ---------------------------------------------------------------------------

std::string format_schedule(const Graph& g, std::span<const SchedulerDecision> decisions) {
  std::ostringstream out;
  for (const auto& d : decisions) {
    if (d.kind == DaemonKind::kEdge) {
      out << "E " << g.edge(d.edge).u << ' ' << g.edge(d.edge).v << '\n';
    } else {
      out << "N " << d.node << '\n';
    }
  }
  return out.str();
}

std::vector<SchedulerDecision> parse_schedule(const Graph& g, std::string_view text) {
  std::vector<SchedulerDecision> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag.front() == '#') continue;
    auto bad = [&](const std::string& msg) {
      fail(ErrorCode::kParse, "schedule line " + std::to_string(line_no) + ": " + msg);
    };
    if (tag == "E") {
      long long u = -1, v = -1;
      if (!(ls >> u >> v) || u < 0 || v < 0) bad("expected \"E u v\"");
      const auto e = g.find_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
      if (!e) bad("(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
      out.push_back(SchedulerDecision::of_edge(*e));
    } else if (tag == "N") {
      long long u = -1;
      if (!(ls >> u) || u < 0 || u >= static_cast<long long>(g.vertex_count())) bad("expected \"N u\" with u < n");
      out.push_back(SchedulerDecision::of_node(static_cast<Vertex>(u)));
    } else {
      bad("unknown decision tag '" + tag + "'");
    }
    std::string extra;
    if (ls >> extra) bad("trailing input '" + extra + "'");
  }
  return out;
}

}  // namespace pavlov
