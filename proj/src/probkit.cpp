#include "vecint/probkit.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace vecint {

std::vector<int> sample(const ProductMeasure& mu, Rng& rng) {
  std::vector<int> word(mu.n());
  for (int i = 0; i < mu.n(); ++i) {
    double u = rng.next_double();
    double acc = 0;
    int letter = mu.num_letters() - 1;
    for (int j = 0; j < mu.num_letters(); ++j) {
      acc += mu.p(i, j);
      if (u < acc) {
        letter = j;
        break;
      }
    }
    word[i] = letter;
  }
  return word;
}

TailReport vector_chernoff_check(const VectorArray& array, const ProductMeasure& mu,
                                 const std::vector<double>& thresholds, long long trials,
                                 std::uint64_t seed) {
  if (trials < 1000) throw std::invalid_argument("vector_chernoff_check: trials >= 1000");
  Vec mean = expected_array_value(array, mu);
  std::vector<long long> exceed(thresholds.size(), 0);
  Rng root(seed);
  for (long long trial = 0; trial < trials; ++trial) {
    Rng rng = root.split(static_cast<std::uint64_t>(trial));
    std::vector<int> word = sample(mu, rng);
    Vec value = array.value(word).cast<double>();
    double deviation = r_norm((value - mean).eval(), array.scaling());
    for (std::size_t k = 0; k < thresholds.size(); ++k)
      if (deviation >= thresholds[k]) ++exceed[k];
  }
  TailReport report;
  report.thresholds = thresholds;
  report.trials = trials;
  report.seed = seed;
  report.bounds_respected = true;
  for (std::size_t k = 0; k < thresholds.size(); ++k) {
    double t = thresholds[k];
    report.empirical.push_back(static_cast<double>(exceed[k]) / trials);
    report.theoretical.push_back(2.0 * array.dim() * std::exp(-t * t / (8.0 * array.n())));
    if (report.empirical.back() > report.theoretical.back()) report.bounds_respected = false;
  }
  return report;
}

TailReport lipschitz_concentration_check(const std::function<double(const std::vector<int>&)>& f,
                                         double lipschitz_bound, const ProductMeasure& mu,
                                         const std::vector<double>& thresholds, long long trials,
                                         std::uint64_t seed, int lipschitz_spot_checks) {
  const int n = mu.n();
  Rng root(seed);
  // Spot-check the Lipschitz claim on random single-coordinate flips.
  {
    Rng rng = root.split(0xf11f);
    for (int check = 0; check < lipschitz_spot_checks; ++check) {
      std::vector<int> word = sample(mu, rng);
      int i = static_cast<int>(rng.next_below(n));
      int other = static_cast<int>(rng.next_below(mu.num_letters()));
      std::vector<int> flipped = word;
      flipped[i] = other;
      if (std::abs(f(word) - f(flipped)) > lipschitz_bound + 1e-12)
        throw std::runtime_error("lipschitz_concentration_check: spot check violated the bound");
    }
  }
  // Estimate the mean from an independent stream, then measure tails.
  double mean = 0;
  {
    Rng rng = root.split(1);
    long long mean_trials = std::max<long long>(trials, 10000);
    for (long long trial = 0; trial < mean_trials; ++trial) {
      Rng row = rng.split(static_cast<std::uint64_t>(trial));
      mean += f(sample(mu, row));
    }
    mean /= static_cast<double>(mean_trials);
  }
  std::vector<long long> exceed(thresholds.size(), 0);
  for (long long trial = 0; trial < trials; ++trial) {
    Rng rng = root.split(0x777700000000ULL + static_cast<std::uint64_t>(trial));
    double value = f(sample(mu, rng));
    for (std::size_t k = 0; k < thresholds.size(); ++k)
      if (std::abs(value - mean) > thresholds[k]) ++exceed[k];
  }
  TailReport report;
  report.thresholds = thresholds;
  report.trials = trials;
  report.seed = seed;
  report.bounds_respected = true;
  for (std::size_t k = 0; k < thresholds.size(); ++k) {
    double a = thresholds[k];
    report.empirical.push_back(static_cast<double>(exceed[k]) / trials);
    report.theoretical.push_back(
        2.0 * std::exp(-a * a / (2.0 * n * lipschitz_bound * lipschitz_bound)));
    if (report.empirical.back() > report.theoretical.back()) report.bounds_respected = false;
  }
  return report;
}

BipartiteGraph BipartiteGraph::empty(int n1, int n2) {
  BipartiteGraph g;
  g.n1 = n1;
  g.n2 = n2;
  g.adjacency.assign(n1, std::vector<std::uint64_t>((n2 + 63) / 64, 0));
  return g;
}

void BipartiteGraph::add_edge(int u, int v) {
  if (!has_edge(u, v)) {
    adjacency[u][v / 64] |= (1ULL << (v % 64));
    ++edges;
  }
}

bool BipartiteGraph::has_edge(int u, int v) const {
  return (adjacency[u][v / 64] >> (v % 64)) & 1ULL;
}

long long BipartiteGraph::common_neighbours(int u, int v) const {
  long long count = 0;
  for (std::size_t w = 0; w < adjacency[u].size(); ++w)
    count += std::popcount(adjacency[u][w] & adjacency[v][w]);
  return count;
}

BipartiteGraph BipartiteGraph::random(int n1, int n2, double p, Rng& rng) {
  BipartiteGraph g = empty(n1, n2);
  for (int u = 0; u < n1; ++u)
    for (int v = 0; v < n2; ++v)
      if (rng.next_double() < p) g.add_edge(u, v);
  return g;
}

DrcResult dependent_random_choice(const BipartiteGraph& graph, int t, std::uint64_t seed,
                                  int attempt_budget) {
  if (t < 1) throw std::invalid_argument("dependent_random_choice: t >= 1");
  DrcResult result;
  result.seed = seed;
  const double n1 = graph.n1, n2 = graph.n2;
  const double alpha = n1 > 0 && n2 > 0 ? static_cast<double>(graph.edges) / (n1 * n2) : 0;
  result.threshold = alpha * std::pow(n1, -1.0 / t) * n2;
  result.required_size = std::pow(alpha, t) * n1 / 2.0;

  Rng root(seed);
  for (int attempt = 0; attempt < attempt_budget; ++attempt) {
    result.attempts = attempt + 1;
    Rng rng = root.split(static_cast<std::uint64_t>(attempt));
    // Common neighbourhood of t random vertices of V2 (with repetition).
    std::vector<int> candidates;
    if (graph.n2 == 0) break;
    std::vector<int> picks(t);
    for (int s = 0; s < t; ++s) picks[s] = static_cast<int>(rng.next_below(graph.n2));
    for (int u = 0; u < graph.n1; ++u) {
      bool all = true;
      for (int s = 0; s < t && all; ++s) all = graph.has_edge(u, picks[s]);
      if (all) candidates.push_back(u);
    }
    // Delete both endpoints of every pair below the threshold.
    std::vector<char> alive(candidates.size(), 1);
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      if (!alive[a]) continue;
      for (std::size_t b = a + 1; b < candidates.size(); ++b) {
        if (!alive[b]) continue;
        if (graph.common_neighbours(candidates[a], candidates[b]) <
            result.threshold) {
          alive[a] = alive[b] = 0;
          break;
        }
      }
    }
    std::vector<int> u_set;
    for (std::size_t a = 0; a < candidates.size(); ++a)
      if (alive[a]) u_set.push_back(candidates[a]);
    if (static_cast<double>(u_set.size()) >= result.required_size) {
      // Verify the pairwise guarantee before returning.
      for (std::size_t a = 0; a < u_set.size(); ++a)
        for (std::size_t b = a + 1; b < u_set.size(); ++b)
          if (graph.common_neighbours(u_set[a], u_set[b]) < result.threshold)
            throw std::logic_error("dependent_random_choice: guarantee violated");
      result.vertices = std::move(u_set);
      result.success = true;
      return result;
    }
  }
  return result;  // probabilistic failure, reported with attempt stats
}

SmallGraph SmallGraph::empty(int n) {
  if (n > 64) throw std::invalid_argument("SmallGraph: n > 64");
  SmallGraph g;
  g.n = n;
  g.adjacency.assign(n, 0);
  return g;
}

SmallGraph SmallGraph::complete(int n) {
  SmallGraph g = empty(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

SmallGraph SmallGraph::cycle(int n) {
  SmallGraph g = empty(n);
  for (int u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
  return g;
}

void SmallGraph::add_edge(int u, int v) {
  adjacency[u] |= (1ULL << v);
  adjacency[v] |= (1ULL << u);
}

bool SmallGraph::has_edge(int u, int v) const { return (adjacency[u] >> v) & 1ULL; }

SmallGraph product_graph(const SmallGraph& g1, const SmallGraph& g2) {
  SmallGraph g = SmallGraph::empty(g1.n * g2.n);
  for (int u1 = 0; u1 < g1.n; ++u1)
    for (int u2 = 0; u2 < g2.n; ++u2)
      for (int v1 = 0; v1 < g1.n; ++v1)
        for (int v2 = 0; v2 < g2.n; ++v2) {
          if (g1.has_edge(u1, v1) && g2.has_edge(u2, v2))
            g.add_edge(u1 * g2.n + u2, v1 * g2.n + v2);
        }
  return g;
}

namespace {

struct BranchState {
  const SmallGraph& graph;
  long long budget;
  long long visited = 0;
  int best = 0;
  std::uint64_t best_set = 0;
  bool exact = true;

  void branch(std::uint64_t chosen, std::uint64_t candidates) {
    if (++visited > budget) {
      exact = false;
      return;
    }
    int chosen_count = std::popcount(chosen);
    if (chosen_count + std::popcount(candidates) <= best) return;
    if (!candidates) {
      if (chosen_count > best) {
        best = chosen_count;
        best_set = chosen;
      }
      return;
    }
    // Branch on the candidate of maximum degree within the candidate set.
    int pick = -1, pick_degree = -1;
    std::uint64_t bits = candidates;
    while (bits) {
      int v = std::countr_zero(bits);
      bits &= bits - 1;
      int degree = std::popcount(graph.adjacency[v] & candidates);
      if (degree > pick_degree) {
        pick_degree = degree;
        pick = v;
      }
    }
    // Include pick.
    branch(chosen | (1ULL << pick), candidates & ~(graph.adjacency[pick] | (1ULL << pick)));
    // Exclude pick.
    branch(chosen, candidates & ~(1ULL << pick));
  }
};

}  // namespace

IndependenceResult independence_number(const SmallGraph& graph, long long budget) {
  BranchState state{graph, budget};
  std::uint64_t all = graph.n == 64 ? ~0ULL : ((1ULL << graph.n) - 1);
  state.branch(0, all);
  IndependenceResult result;
  result.size = state.best;
  result.exact = state.exact;
  std::uint64_t bits = state.best_set;
  while (bits) {
    result.witness.push_back(std::countr_zero(bits));
    bits &= bits - 1;
  }
  return result;
}

ContiguityTable contiguity_exponent(const std::vector<std::vector<int>>& domain,
                                    const std::function<double(const std::vector<int>&)>& mu,
                                    const std::function<double(const std::vector<int>&)>& nu,
                                    int n, const std::vector<double>& epsilons) {
  ContiguityTable table;
  table.epsilons = epsilons;
  for (double eps : epsilons) {
    double factor = std::pow(1.0 - eps, n);
    double mass = 0;
    for (const auto& word : domain) {
      double mu_x = mu(word);
      if (nu(word) < factor * mu_x) mass += mu_x;
    }
    table.mu_mass.push_back(mass);
  }
  return table;
}

bool Subcube::contains(const std::vector<int>& word) const {
  for (int i = 0; i < n; ++i) {
    if (allowed[i].empty()) continue;
    if (!std::binary_search(allowed[i].begin(), allowed[i].end(), word[i])) return false;
  }
  return true;
}

Subcube Subcube::random(int n, int num_letters, Rng& rng) {
  Subcube cube;
  cube.n = n;
  cube.allowed.resize(n);
  for (int i = 0; i < n; ++i) {
    // Random nonempty letter subset; empty list encodes the full alphabet.
    std::vector<int> letters;
    for (int j = 0; j < num_letters; ++j)
      if (rng.next_double() < 0.5) letters.push_back(j);
    if (letters.empty() || static_cast<int>(letters.size()) == num_letters) continue;
    cube.allowed[i] = letters;
  }
  return cube;
}

CorrelationResult correlation_check(const PairMeasure& q, const Subcube& a1, const Subcube& a2) {
  if (a1.n != q.n() || a2.n != q.n()) throw std::invalid_argument("correlation_check: n mismatch");
  const int j1 = q.num_letters1();
  const int j2 = q.num_letters2();
  auto allowed1 = [&](int i, int a) {
    return a1.allowed[i].empty() ||
           std::binary_search(a1.allowed[i].begin(), a1.allowed[i].end(), a);
  };
  auto allowed2 = [&](int i, int b) {
    return a2.allowed[i].empty() ||
           std::binary_search(a2.allowed[i].begin(), a2.allowed[i].end(), b);
  };
  double joint = 1, mass1 = 1, mass2 = 1;
  ProductMeasure p1 = marginal(q, 1);
  ProductMeasure p2 = marginal(q, 2);
  for (int i = 0; i < q.n(); ++i) {
    double cell = 0, m1 = 0, m2 = 0;
    for (int a = 0; a < j1; ++a) {
      if (allowed1(i, a)) m1 += p1.p(i, a);
      for (int b = 0; b < j2; ++b) {
        if (allowed1(i, a) && allowed2(i, b)) cell += q.q(i, a, b);
      }
    }
    for (int b = 0; b < j2; ++b)
      if (allowed2(i, b)) m2 += p2.p(i, b);
    joint *= cell;
    mass1 *= m1;
    mass2 *= m2;
  }
  CorrelationResult result;
  result.lhs = joint * joint;
  result.rhs = mass1 * mass2;
  result.holds = result.lhs <= result.rhs * (1 + 1e-12) + 1e-300;
  result.exponent_p = mass1 > 0 ? -std::log2(mass1) / q.n() : std::numeric_limits<double>::infinity();
  result.exponent_q = joint > 0 ? -std::log2(joint) / q.n() : std::numeric_limits<double>::infinity();
  return result;
}

CorrelationResult correlation_check(const PairMeasure& q,
                                    const std::vector<std::vector<int>>& a1,
                                    const std::vector<std::vector<int>>& a2) {
  const int j2 = q.num_letters2();
  double joint = 0;
  for (const auto& x : a1)
    for (const auto& y : a2) {
      double mass = 1;
      for (int i = 0; i < q.n(); ++i) mass *= q.q(i, x[i], y[i]);
      joint += mass;
    }
  ProductMeasure p1 = marginal(q, 1);
  ProductMeasure p2 = marginal(q, 2);
  double mass1 = 0, mass2 = 0;
  for (const auto& x : a1) mass1 += p1.mass(x);
  for (const auto& y : a2) mass2 += p2.mass(y);
  (void)j2;
  CorrelationResult result;
  result.lhs = joint * joint;
  result.rhs = mass1 * mass2;
  result.holds = result.lhs <= result.rhs * (1 + 1e-12) + 1e-300;
  result.exponent_p = mass1 > 0 ? -std::log2(mass1) / q.n() : std::numeric_limits<double>::infinity();
  result.exponent_q = joint > 0 ? -std::log2(joint) / q.n() : std::numeric_limits<double>::infinity();
  return result;
}

}  // namespace vecint
