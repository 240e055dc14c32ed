// Randomized procedures and empirical validators for the probabilistic
// toolkit: sampling, vector Chernoff and Lipschitz concentration checks,
// Dependent Random Choice, exact independence numbers of small graphs,
// exponential-contiguity diagnostics and the Cauchy-Schwarz correlation
// check. Everything takes an explicit seed and reports it.
#pragma once

#include "vecint/array.hpp"
#include "vecint/measures.hpp"
#include "vecint/rng.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace vecint {

// One word drawn from a product measure.
std::vector<int> sample(const ProductMeasure& mu, Rng& rng);
inline std::vector<int> sample(const ProductMeasure& mu, std::uint64_t seed) {
  Rng rng(seed);
  return sample(mu, rng);
}

struct TailReport {
  std::vector<double> thresholds;
  std::vector<double> empirical;    // exceedance frequencies
  std::vector<double> theoretical;  // the cited bound at each threshold
  long long trials = 0;
  std::uint64_t seed = 0;
  bool bounds_respected = false;    // empirical <= theoretical everywhere
};

// P(||V(a) - E V(a)||_R >= t) <= 2 D e^{-t^2 / 8n} for R-bounded arrays.
TailReport vector_chernoff_check(const VectorArray& array, const ProductMeasure& mu,
                                 const std::vector<double>& thresholds, long long trials,
                                 std::uint64_t seed);

// P(|f - E f| > a) <= 2 e^{-a^2 / 2 n b^2} for b-Lipschitz f. The Lipschitz
// claim is spot-checked on random single-coordinate flips; violations throw.
TailReport lipschitz_concentration_check(const std::function<double(const std::vector<int>&)>& f,
                                         double lipschitz_bound, const ProductMeasure& mu,
                                         const std::vector<double>& thresholds, long long trials,
                                         std::uint64_t seed, int lipschitz_spot_checks = 256);

// Bipartite graph with parts of sizes n1, n2; adjacency as bitsets over V2.
struct BipartiteGraph {
  int n1 = 0, n2 = 0;
  std::vector<std::vector<std::uint64_t>> adjacency;  // n1 rows of n2-bit sets
  long long edges = 0;

  static BipartiteGraph empty(int n1, int n2);
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  long long common_neighbours(int u, int v) const;
  static BipartiteGraph random(int n1, int n2, double p, Rng& rng);
};

struct DrcResult {
  std::vector<int> vertices;       // U inside V1
  double threshold = 0;            // alpha * N1^{-1/t} * N2
  double required_size = 0;        // alpha^t * N1 / 2
  int attempts = 0;
  bool success = false;
  std::uint64_t seed = 0;
};

// Dependent Random Choice: sample t vertices of V2 with repetition, take
// their common neighbourhood in V1, delete both endpoints of pairs below
// the threshold; retry until |U| is large enough or the budget (32) is
// exhausted. The pairwise guarantee of the returned U is re-verified.
DrcResult dependent_random_choice(const BipartiteGraph& graph, int t, std::uint64_t seed,
                                  int attempt_budget = 32);

// Simple undirected graph on up to 64 vertices as adjacency bitsets.
struct SmallGraph {
  int n = 0;
  std::vector<std::uint64_t> adjacency;

  static SmallGraph empty(int n);
  static SmallGraph complete(int n);
  static SmallGraph cycle(int n);
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
};

// AND-product: (u1,u2) ~ (v1,v2) iff u1 ~ v1 and u2 ~ v2.
SmallGraph product_graph(const SmallGraph& g1, const SmallGraph& g2);

struct IndependenceResult {
  int size = 0;
  bool exact = true;  // false when the branch budget was exhausted
  std::vector<int> witness;
};

// Exact maximum independent set by branch and bound.
IndependenceResult independence_number(const SmallGraph& graph, long long budget = 50000000);

// Exact mu-mass of B_eps = { x in Delta : nu(x) < (1-eps)^n mu(x) } per
// epsilon; Delta is an explicit word list with both measures evaluated
// pointwise. nu is given as exact point masses (e.g. 1/|fibre|).
struct ContiguityTable {
  std::vector<double> epsilons;
  std::vector<double> mu_mass;  // mu(B_eps), decreasing in eps
};

ContiguityTable contiguity_exponent(const std::vector<std::vector<int>>& domain,
                                    const std::function<double(const std::vector<int>&)>& mu,
                                    const std::function<double(const std::vector<int>&)>& nu,
                                    int n, const std::vector<double>& epsilons);

// Subcube family: per coordinate, the set of allowed letters (empty list
// means unconstrained).
struct Subcube {
  int n = 0;
  std::vector<std::vector<int>> allowed;  // allowed[i], sorted; empty = all

  bool contains(const std::vector<int>& word) const;
  static Subcube random(int n, int num_letters, Rng& rng);
};

struct CorrelationResult {
  double lhs = 0;   // mu_q(A1 x A2)^2
  double rhs = 0;   // mu_p1(A1) * mu_p2(A2)
  bool holds = false;
  double exponent_p = 0;  // -log2 mu_p1(A1) / n
  double exponent_q = 0;  // -log2 mu_q(A1 x A2) / n
};

// Cauchy-Schwarz direction mu_q(A1 x A2)^2 <= mu_p1(A1) mu_p2(A2), exact
// factorised evaluation over subcube families.
CorrelationResult correlation_check(const PairMeasure& q, const Subcube& a1, const Subcube& a2);

// The same over explicit word lists (n small).
CorrelationResult correlation_check(const PairMeasure& q,
                                    const std::vector<std::vector<int>>& a1,
                                    const std::vector<std::vector<int>>& a2);

}  // namespace vecint
