// Exact, arbitrary-precision enumeration and counting of fibres and
// intersection pairs. Counts go through layered dynamic programming over
// reachable partial-sum vectors; probabilities on the exact paths are
// rationals, never floats.
#pragma once

#include "vecint/array.hpp"
#include "vecint/bigint.hpp"
#include "vecint/maxent.hpp"

#include <map>
#include <optional>
#include <vector>

namespace vecint {

struct FibreCount {
  BigInt count;
  double log2_count = 0;  // log2(count); -inf for empty fibres
  // conditional_marginals[i][j] = P(a_i = j | V(a) = w), exact rationals.
  std::optional<std::vector<std::vector<BigRat>>> conditional_marginals;
  long long states_visited = 0;
};

struct CountOptions {
  long long state_budget = 100000000;  // max live DP states across a layer
  bool conditional_marginals = false;
};

struct StateBudgetExceeded : std::runtime_error {
  StateBudgetExceeded(int layer, long long states)
      : std::runtime_error("state budget exceeded at layer " + std::to_string(layer)),
        layer(layer),
        states(states) {}
  int layer;
  long long states;
};

// |(J^n)^V_w| by layered DP: states are reachable partial sums after a
// prefix, pruned with precomputed per-dimension suffix extremes.
FibreCount count_fibre(const VectorArray& array, const IntVec& target,
                       const CountOptions& options = {});
inline FibreCount count_fibre(const Fibre& fibre, const CountOptions& options = {}) {
  return count_fibre(fibre.array, fibre.target, options);
}

// All words a with V(a) = w in lexicographic order (letter-index order).
// Checks the exact count against the cap first.
std::vector<std::vector<int>> enumerate_fibre(const VectorArray& array, const IntVec& target,
                                              long long cap = 2000000);
inline std::vector<std::vector<int>> enumerate_fibre(const Fibre& fibre,
                                                     long long cap = 2000000) {
  return enumerate_fibre(fibre.array, fibre.target, cap);
}

// Ordered-pair counts over a fibre X at z, keyed by intersection value
// V_cap(a, b) = sum over { i : a_i = b_i = 1 } of v_i. The diagonal is
// excluded by default, matching "A != B". An optional window restricts the
// recorded targets to ||target - centre||_R <= radius.
struct PairWindow {
  IntVec centre;
  double radius = 0;
};

struct PairHistogram {
  std::map<std::vector<long long>, BigInt> counts;
  BigInt fibre_size;
  bool diagonal_included = false;
};

PairHistogram pair_histogram(const VectorArray& binary, const IntVec& z,
                             const std::optional<PairWindow>& window = std::nullopt,
                             bool include_diagonal = false, long long fibre_cap = 2000000);

// Argmax of the pair histogram; ties broken by lexicographically smallest
// target. Throws on empty histograms (|X| <= 1).
std::pair<IntVec, BigInt> popular_intersection(const VectorArray& binary, const IntVec& z);

// H(mu^V_w) - log2 |(J^n)^V_w|, which is >= 0 (the upper bound on the count
// is exact). Throws when the maxent solve does not converge.
struct LdpDeviation {
  double entropy_bits = 0;
  double log2_count = 0;
  double deviation_bits = 0;
};
LdpDeviation ldp_deviation(const VectorArray& array, const IntVec& target,
                           const CountOptions& options = {});

// Number of pairs of words with a given intersection pattern M: the words
// have letter compositions `first` (rows) and `second` (columns), and
// M[j1][j2] counts coordinates with letters (j1, j2). Equals the
// multinomial n! / prod M[j1][j2]!.
BigInt pattern_count(const std::vector<long long>& first, const std::vector<long long>& second,
                     const std::vector<std::vector<long long>>& pattern);

// The basis-vector array of the pattern setting: alphabet [s] x [t],
// entry e_{(j1,j2)} in Z^{s*t}. Used to cross-check pattern_count against
// the generic DP.
VectorArray pattern_basis_array(int n, int s, int t);

BigInt factorial(long long n);

}  // namespace vecint
