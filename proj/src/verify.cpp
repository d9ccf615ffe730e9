#include "pavlov/verify.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "pavlov/gf2.hpp"

namespace pavlov {

ExhaustiveReport exhaustive_1fair_check(const Graph& g, std::string graph_id) {
  const std::size_t m = g.edge_count();
  if (m == 0) fail(ErrorCode::kInvalidArgument, "exhaustive check needs at least one edge");
  if (m > kMaxExhaustiveEdges)
    fail(ErrorCode::kBudgetExceeded, "exhaustive check is limited to m <= " + std::to_string(kMaxExhaustiveEdges) +
                                          " (got m=" + std::to_string(m) + ")");
  ExhaustiveReport r;
  r.graph_id = std::move(graph_id);
  r.n = g.vertex_count();
  r.m = m;

  std::vector<EdgeId> order(m);
  std::iota(order.begin(), order.end(), 0);
  do {
    PermutationVerdict v;
    v.nilpotent = is_nilpotent(schedule_matrix(g, order));
    v.stabilizes = true;
    for (Vertex s = 0; s < r.n && v.stabilizes; ++s) {
      if (!periodic_outcome(g, Configuration::single_one(r.n, s), order).stabilizes) {
        v.stabilizes = false;
        v.counterexample = s;
      }
    }
    if (v.nilpotent != v.stabilizes)
      fail(ErrorCode::kInternal, "nilpotency and simulation disagree on a permutation of " + r.graph_id);
    ++r.permutations_tested;
    if (v.stabilizes) {
      ++r.stabilizing;
    } else if (r.failures.size() < kMaxReportedFailures) {
      v.order = order;
      r.failures.push_back(std::move(v));
    }
  } while (std::next_permutation(order.begin(), order.end()));

  BigInt nfact = 1;
  for (Vertex k = 2; k <= r.n; ++k) nfact *= k;
  std::ostringstream note;
  note << "tested all " << m << "! = " << r.permutations_tested << " edge permutations";
  if (m + 1 == r.n) note << "; the vertex count " << r.n << "! = " << nfact << " would overcount, since a 1-fair edge daemon orders the "
                         << m << " edges";
  r.notes.push_back(note.str());
  r.notes.push_back("starts tested: the " + std::to_string(r.n) + " single-one configurations (sufficient by linearity)");
  return r;
}

std::string to_json(const ExhaustiveReport& r) {
  using nlohmann::json;
  json failures = json::array();
  for (const auto& f : r.failures) {
    json item{{"order", f.order}, {"nilpotent", f.nilpotent}, {"stabilizes", f.stabilizes}};
    if (f.counterexample) item["counterexample_single_one"] = *f.counterexample;
    failures.push_back(std::move(item));
  }
  return json{{"graph", r.graph_id},
              {"n", r.n},
              {"m", r.m},
              {"permutations_tested", r.permutations_tested},
              {"stabilizing", r.stabilizing},
              {"all_stabilize", r.all_stabilize()},
              {"failures", failures},
              {"notes", r.notes}}
      .dump(2);
}

// ---------------------------------------------------------------------------------

namespace {

/// Runs body(i) for i in [0, count) on up to `threads` workers. Work is
/// split into contiguous blocks, so per-index outputs do not depend on the
/// worker count.
template <class F>
void parallel_for(std::size_t count, unsigned threads, F&& body) {
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  const std::size_t chunk = (count + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t * chunk; i < std::min(count, (t + 1) * chunk); ++i) body(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

Configuration random_configuration(Vertex n, Rng& rng, bool allow_zero) {
  Configuration x(n);
  do {
    for (Vertex v = 0; v < n; ++v) x.set(v, rng.coin());
  } while (!allow_zero && x.is_zero() && n > 0);
  return x;
}

std::size_t items_of(const Graph& g, const Scheduler& s) {
  return s.kind() == DaemonKind::kNode ? g.vertex_count() : g.edge_count();
}

}  // namespace

StabilizationEstimate estimate_stabilization(const Graph& g, const SchedulerFactory& make,
                                             const std::optional<Configuration>& x0, std::size_t trials,
                                             std::size_t max_rounds, std::uint64_t seed, unsigned threads) {
  require(trials >= 1, "trials must be >= 1");
  if (x0) require(x0->size() == g.vertex_count(), "configuration length does not match the graph");
  std::vector<std::size_t> steps(trials, 0);
  std::vector<char> ok(trials, 0);
  parallel_for(trials, threads, [&](std::size_t i) {
    const std::uint64_t trial_seed = derive_seed(seed, i);
    SchedulerPtr s = make(derive_seed(trial_seed, 1));
    Rng rng(derive_seed(trial_seed, 2));
    Configuration x = x0 ? *x0 : random_configuration(g.vertex_count(), rng, true);
    const unsigned b = s->fairness_bound().value_or(1);
    const std::size_t items = items_of(g, *s);
    const std::size_t budget = max_rounds * (b * (items > 0 ? items - 1 : 0) + 1);
    std::size_t t = 0;
    while (!x.is_zero() && t < budget) {
      s->advance(x);
      ++t;
    }
    ok[i] = x.is_zero();
    steps[i] = t;
  });
  StabilizationEstimate e;
  e.trials = trials;
  double total_steps = 0;
  for (std::size_t i = 0; i < trials; ++i) {
    if (!ok[i]) continue;
    ++e.successes;
    total_steps += static_cast<double>(steps[i]);
  }
  e.p_hat = static_cast<double>(e.successes) / static_cast<double>(trials);
  e.stderr_ = std::sqrt(e.p_hat * (1 - e.p_hat) / static_cast<double>(trials));
  e.mean_steps = e.successes ? total_steps / static_cast<double>(e.successes) : 0.0;
  return e;
}

// ---------------------------------------------------------------------------------

namespace {

struct CellResult {
  double mean = 0;
  double stderr_ = 0;
  std::size_t unconverged = 0;
};

CellResult run_cell(const Graph& cycle, const std::vector<Vertex>& perm, std::size_t samples, std::uint64_t cell_seed,
                    const ExperimentOptions& opt) {
  const Vertex n = cycle.vertex_count();
  const std::size_t max_rounds = opt.max_rounds ? opt.max_rounds : static_cast<std::size_t>(100) * n;
  std::vector<double> rounds(samples, 0.0);
  std::vector<char> converged(samples, 1);
  parallel_for(samples, opt.threads, [&](std::size_t i) {
    Rng rng(derive_seed(cell_seed, i));
    Configuration x = random_configuration(n, rng, opt.include_zero);
    std::size_t steps = 0;
    const std::size_t budget = max_rounds * n;
    while (!x.is_zero() && steps < budget) {
      const Vertex item = perm[steps % n];
      if (opt.interpretation == Interpretation::kNode) {
        const auto nb = cycle.neighbors(item);
        x.play(item, nb[rng.coin() ? 1 : 0]);
      } else {
        const Edge& e = cycle.edge(item);
        x.play(e.u, e.v);
      }
      ++steps;
    }
    converged[i] = x.is_zero();
    rounds[i] = static_cast<double>((steps + n - 1) / n);
  });
  CellResult c;
  double sum = 0, sq = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    c.unconverged += converged[i] ? 0 : 1;
    sum += rounds[i];
    sq += rounds[i] * rounds[i];
  }
  const double s = static_cast<double>(samples);
  c.mean = sum / s;
  const double var = samples > 1 ? std::max(0.0, (sq - s * c.mean * c.mean) / (s - 1)) : 0.0;
  c.stderr_ = std::sqrt(var / s);
  return c;
}

}  // namespace

ExperimentTable convergence_experiment(const std::vector<Vertex>& n_list, PermFamily family, std::size_t samples,
                                       std::uint64_t seed, const ExperimentOptions& opt) {
  require(samples >= 1, "samples must be >= 1");
  require(!n_list.empty(), "no cycle sizes given");
  for (Vertex n : n_list) {
    if (n < 3) fail(ErrorCode::kInvalidArgument, "cycle needs n >= 3, got " + std::to_string(n));
    if (family == PermFamily::kTimesThree && n % 3 == 0)
      fail(ErrorCode::kInvalidArgument, "p3 needs gcd(3,n)=1, n=" + std::to_string(n));
  }
  ExperimentTable t;
  for (Vertex n : n_list) {
    const Graph cycle = generate(Family::kCycle, n);
    const std::uint64_t row_seed = derive_seed(seed, (static_cast<std::uint64_t>(n) << 4) | static_cast<unsigned>(family));
    ExperimentRow row;
    row.family = std::string(perm_family_name(family));
    row.n = n;
    row.samples = samples;
    row.seed = seed;
    if (family == PermFamily::kRandom) {
      require(opt.random_perms >= 1, "random family needs at least one permutation");
      bool first = true;
      for (std::size_t k = 0; k < opt.random_perms; ++k) {
        Rng perm_rng(derive_seed(row_seed, 0x10000 + k));
        const auto perm = node_permutation(family, n, &perm_rng);
        const CellResult c = run_cell(cycle, perm, samples, derive_seed(row_seed, k), opt);
        row.unconverged += c.unconverged;
        if (first || c.mean > row.mean_rounds) {
          row.mean_rounds = c.mean;
          row.stderr_ = c.stderr_;
          first = false;
        }
      }
    } else {
      const auto perm = node_permutation(family, n, nullptr);
      const CellResult c = run_cell(cycle, perm, samples, derive_seed(row_seed, 0), opt);
      row.mean_rounds = c.mean;
      row.stderr_ = c.stderr_;
      row.unconverged = c.unconverged;
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string to_csv(const ExperimentTable& t) {
  std::ostringstream out;
  out << "family,n,samples,mean_rounds,stderr,seed\n";
  out << std::fixed << std::setprecision(4);
  for (const auto& r : t.rows)
    out << r.family << ',' << r.n << ',' << r.samples << ',' << r.mean_rounds << ',' << r.stderr_ << ',' << r.seed
        << '\n';
  return out.str();
}

std::string to_json(const ExperimentTable& t) {
  using nlohmann::json;
  json rows = json::array();
  for (const auto& r : t.rows)
    rows.push_back({{"family", r.family},
                    {"n", r.n},
                    {"samples", r.samples},
                    {"mean_rounds", r.mean_rounds},
                    {"stderr", r.stderr_},
                    {"seed", r.seed},
                    {"unconverged", r.unconverged}});
  return json{{"rows", rows}}.dump(2);
}

std::optional<double> reference_rounds(PermFamily family, Vertex n) {
  static const std::map<PermFamily, std::map<Vertex, double>> table = {
      {PermFamily::kIdentity,
       {{4, 2.486}, {8, 4.225}, {16, 6.401}, {32, 8.33}, {64, 10.498}, {128, 13.135}, {256, 16.091}, {512, 17.954},
        {1024, 20.331}}},
      {PermFamily::kTimesThree,
       {{4, 2.469}, {8, 4.039}, {16, 5.807}, {32, 7.662}, {64, 9.639}, {128, 11.718}, {256, 14.323}, {512, 16.054},
        {1024, 19.826}}},
      {PermFamily::kRandom,
       {{4, 2.289}, {8, 4.499}, {16, 6.527}, {32, 8.781}, {64, 11.161}, {128, 14.151}, {256, 17.342}, {512, 20.518},
        {1024, 22.336}}},
      {PermFamily::kPattern13,
       {{4, 2.168}, {8, 4.656}, {16, 7.069}, {32, 9.837}, {64, 12.653}, {128, 14.859}, {256, 18.504}, {512, 20.346},
        {1024, 20.392}}},
  };
  const auto& row = table.at(family);
  const auto it = row.find(n);
  if (it == row.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------------------------

FairnessProfile fairness_profile(Scheduler& scheduler, std::size_t steps, std::uint64_t seed,
                                 const std::optional<Configuration>& x0) {
  const Graph& g = scheduler.graph();
  const std::size_t items = items_of(g, scheduler);
  require(steps >= g.vertex_count(), "fairness profile needs steps >= n");
  Rng rng(seed);
  Configuration x = x0 ? *x0 : random_configuration(g.vertex_count(), rng, true);
  require(x.size() == g.vertex_count(), "configuration length does not match the graph");

  std::vector<std::size_t> count(items, 0), occurrences(items, 0);
  std::vector<std::vector<std::size_t>> snap(items);
  std::vector<std::size_t> gaps;
  for (std::size_t t = 0; t < steps; ++t) {
    const SchedulerDecision d = scheduler.next(x);
    EdgeId e = d.edge;
    std::size_t item = d.edge;
    if (d.kind == DaemonKind::kNode) {
      item = d.node;
      e = *g.find_edge(d.node, scheduler.random_partner(d.node));
    }
    x.play(g.edge(e).u, g.edge(e).v);
    if (occurrences[item] > 0) {
      std::size_t worst = 0;
      for (std::size_t y = 0; y < items; ++y)
        if (y != item) worst = std::max(worst, count[y] - snap[item][y]);
      gaps.push_back(worst);
    }
    ++count[item];
    ++occurrences[item];
    snap[item] = count;
  }

  FairnessProfile p;
  p.steps = steps;
  p.gaps = gaps.size();
  for (std::size_t y = 0; y < items; ++y)
    if (occurrences[y] < 2) p.under_scheduled.push_back(static_cast<Vertex>(y));
  if (!gaps.empty()) {
    std::sort(gaps.begin(), gaps.end());
    auto q = [&](double f) {
      const auto idx = static_cast<std::size_t>(std::ceil(f * static_cast<double>(gaps.size()))) - 1;
      return static_cast<double>(gaps[std::min(idx, gaps.size() - 1)]);
    };
    p.b = gaps.back();
    p.q50 = q(0.50);
    p.q90 = q(0.90);
    p.q95 = q(0.95);
    p.q99 = q(0.99);
  }
  return p;
}

}  // namespace pavlov
