#include "pavlov/dynamics.hpp"

#include <bit>
#include <cmath>

namespace pavlov {

Configuration Configuration::parse(std::string_view text) {
  if (text.starts_with("0b")) text.remove_prefix(2);
  Configuration c(static_cast<Vertex>(text.size()));
  for (Vertex i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      c.set(i, true);
    } else if (text[i] != '0') {
      fail(ErrorCode::kParse, "configuration must be a 0/1 string, got '" + std::string(text) + "'");
    }
  }
  return c;
}

Configuration Configuration::from_mask(Vertex n, std::uint64_t mask) {
  require(n <= 64, "from_mask needs n <= 64");
  Configuration c(n);
  if (n > 0) c.words_[0] = n == 64 ? mask : (mask & ((std::uint64_t{1} << n) - 1));
  return c;
}

Configuration Configuration::single_one(Vertex n, Vertex v) {
  require(v < n, "single_one: vertex out of range");
  Configuration c(n);
  c.set(v, true);
  return c;
}

Configuration Configuration::all_ones(Vertex n) {
  Configuration c(n);
  for (Vertex v = 0; v < n; ++v) c.set(v, true);
  return c;
}

bool Configuration::is_zero() const {
  for (auto w : words_)
    if (w != 0) return false;
  return true;
}

std::size_t Configuration::popcount() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::uint64_t Configuration::to_mask() const {
  require(n_ <= 64, "to_mask needs n <= 64");
  return words_.empty() ? 0 : words_[0];
}

std::string Configuration::to_string() const {
  std::string s(n_, '0');
  for (Vertex v = 0; v < n_; ++v)
    if (get(v)) s[v] = '1';
  return s;
}

std::size_t Configuration::hash() const {
  std::size_t h = n_ * 0x9e3779b97f4a7c15ULL;
  for (auto w : words_) h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
  return h;
}

Configuration& Configuration::operator^=(const Configuration& other) {
  require(n_ == other.n_, "configuration sizes differ");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

// ---------------------------------------------------------------------------

namespace {
void check_size(const Graph& g, const Configuration& x) {
  require(x.size() == g.vertex_count(), "configuration length " + std::to_string(x.size()) +
                                            " does not match n=" + std::to_string(g.vertex_count()));
}
}  // namespace

Configuration step(const Graph& g, const Configuration& x, EdgeId e) {
  check_size(g, x);
  require(e < g.edge_count(), "edge index out of range");
  Configuration y = x;
  y.play(g.edge(e).u, g.edge(e).v);
  return y;
}

Configuration step(const Graph& g, const Configuration& x, Vertex u, Vertex v) {
  const auto e = g.find_edge(u, v);
  if (!e) fail(ErrorCode::kInvalidArgument, "(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
  return step(g, x, *e);
}

RunResult run(const Graph& g, const Configuration& x0, const EdgeStream& schedule, std::size_t max_steps,
              bool record_trajectory) {
  check_size(g, x0);
  RunResult r;
  r.final_config = x0;
  if (x0.is_zero()) {
    r.reached_zero = true;
    return r;
  }
  while (r.steps < max_steps) {
    const auto e = schedule(r.final_config);
    if (!e) {
      r.schedule_exhausted = true;
      break;
    }
    require(*e < g.edge_count(), "scheduled edge index out of range");
    r.final_config.play(g.edge(*e).u, g.edge(*e).v);
    ++r.steps;
    if (record_trajectory) r.trajectory.push_back({r.steps, *e, r.final_config});
    if (r.final_config.is_zero()) {
      r.reached_zero = true;
      break;
    }
  }
  return r;
}

RunResult run(const Graph& g, const Configuration& x0, std::span<const EdgeId> schedule, std::size_t max_steps,
              bool record_trajectory) {
  std::size_t next = 0;
  return run(
      g, x0,
      [&](const Configuration&) -> std::optional<EdgeId> {
        if (next == schedule.size()) return std::nullopt;
        return schedule[next++];
      },
      max_steps, record_trajectory);
}

std::size_t default_max_steps(Vertex n) {
  return static_cast<std::size_t>(std::ceil(1e4 * n * std::log(static_cast<double>(n) + 1.0)));
}

bool is_fixed_point(const Graph& g, const Configuration& x) {
  check_size(g, x);
  for (const Edge& e : g.edges())
    if (x.get(e.u) || x.get(e.v)) return false;
  return true;
}

std::vector<Predecessor> predecessors(const Graph& g, const Configuration& x) {
  check_size(g, x);
  std::vector<Predecessor> out;
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    const bool a = x.get(e.u), b = x.get(e.v);
    if (a != b) continue;  // a played edge always ends with equal labels
    // preimages of (a,a) under (p,q) -> (p^q, p^q), excluding x itself
    const std::pair<bool, bool> from_one[2] = {{false, true}, {true, false}};
    const std::pair<bool, bool> from_zero[2] = {{true, true}, {false, false}};
    for (const auto& [p, q] : a ? from_one : from_zero) {
      if (p == a && q == b) continue;
      Configuration y = x;
      y.set(e.u, p);
      y.set(e.v, q);
      out.push_back({std::move(y), id});
    }
  }
  return out;
}

PeriodicOutcome periodic_outcome(const Graph& g, const Configuration& x0, std::span<const EdgeId> period) {
  check_size(g, x0);
  require(!period.empty(), "periodic_outcome: empty period");
  for (EdgeId e : period) require(e < g.edge_count(), "periodic_outcome: edge index out of range");

  auto apply_period = [&](Configuration& x) {
    for (EdgeId e : period) x.play(g.edge(e).u, g.edge(e).v);
  };

  // Brent's cycle detection on the period-boundary map.
  std::size_t power = 1, lambda = 1;
  Configuration tortoise = x0, hare = x0;
  apply_period(hare);
  while (!(tortoise == hare)) {
    if (power == lambda) {
      tortoise = hare;
      power *= 2;
      lambda = 0;
    }
    apply_period(hare);
    ++lambda;
  }
  std::size_t mu = 0;
  tortoise = x0;
  hare = x0;
  for (std::size_t i = 0; i < lambda; ++i) apply_period(hare);
  while (!(tortoise == hare)) {
    apply_period(tortoise);
    apply_period(hare);
    ++mu;
  }

  PeriodicOutcome out;
  out.transient = mu;
  out.cycle_length = lambda;
  out.stabilizes = tortoise.is_zero();
  if (out.stabilizes) {
    Configuration x = x0;
    std::size_t steps = 0;
    while (!x.is_zero()) {
      const EdgeId e = period[steps % period.size()];
      x.play(g.edge(e).u, g.edge(e).v);
      ++steps;
    }
    out.steps = steps;
  }
  return out;
}

}  // namespace pavlov
