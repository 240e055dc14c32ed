#include "vecint/exactcount.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace vecint {

namespace {

struct KeyHash {
  std::size_t operator()(const std::vector<long long>& key) const {
    std::size_t h = 1469598103934665603ULL;
    for (long long value : key) {
      h ^= static_cast<std::size_t>(value);
      h *= 1099511628211ULL;
    }
    return h;
  }
};

using Layer = std::unordered_map<std::vector<long long>, BigInt, KeyHash>;

// suffix_min[i][d] / suffix_max[i][d]: extreme achievable contribution of
// coordinates i..n-1 in dimension d.
void suffix_extremes(const VectorArray& array, std::vector<std::vector<long long>>& lo,
                     std::vector<std::vector<long long>>& hi) {
  const int n = array.n();
  const int dim = array.dim();
  lo.assign(n + 1, std::vector<long long>(dim, 0));
  hi.assign(n + 1, std::vector<long long>(dim, 0));
  for (int i = n - 1; i >= 0; --i) {
    for (int d = 0; d < dim; ++d) {
      long long mn = array.entry(i, 0)[d], mx = mn;
      for (int j = 1; j < array.num_letters(); ++j) {
        mn = std::min(mn, array.entry(i, j)[d]);
        mx = std::max(mx, array.entry(i, j)[d]);
      }
      lo[i][d] = lo[i + 1][d] + mn;
      hi[i][d] = hi[i + 1][d] + mx;
    }
  }
}

bool reachable(const std::vector<long long>& state, const IntVec& target,
               const std::vector<long long>& lo, const std::vector<long long>& hi) {
  for (std::size_t d = 0; d < state.size(); ++d) {
    long long need = target[static_cast<int>(d)] - state[d];
    if (need < lo[d] || need > hi[d]) return false;
  }
  return true;
}

std::vector<Layer> forward_layers(const VectorArray& array, const IntVec& target,
                                  long long state_budget, long long& states_visited,
                                  bool keep_all_layers) {
  const int n = array.n();
  const int dim = array.dim();
  std::vector<std::vector<long long>> lo, hi;
  suffix_extremes(array, lo, hi);

  std::vector<Layer> layers;
  Layer current;
  current[std::vector<long long>(dim, 0)] = 1;
  if (keep_all_layers) layers.push_back(current);
  states_visited = 1;
  for (int i = 0; i < n; ++i) {
    Layer next;
    for (const auto& [state, count] : current) {
      std::vector<long long> successor(dim);
      for (int j = 0; j < array.num_letters(); ++j) {
        for (int d = 0; d < dim; ++d) successor[d] = state[d] + array.entry(i, j)[d];
        if (!reachable(successor, target, lo[i + 1], hi[i + 1])) continue;
        next[successor] += count;
      }
    }
    states_visited += static_cast<long long>(next.size());
    if (static_cast<long long>(next.size()) > state_budget)
      throw StateBudgetExceeded(i + 1, static_cast<long long>(next.size()));
    if (keep_all_layers) layers.push_back(next);
    current = std::move(next);
  }
  if (!keep_all_layers) layers.push_back(std::move(current));
  return layers;
}

}  // namespace

FibreCount count_fibre(const VectorArray& array, const IntVec& target,
                       const CountOptions& options) {
  if (target.size() != array.dim()) throw std::invalid_argument("count_fibre: target size != D");
  FibreCount result;
  std::vector<Layer> layers =
      forward_layers(array, target, options.state_budget, result.states_visited,
                     options.conditional_marginals);
  const Layer& last = layers.back();
  std::vector<long long> key(target.data(), target.data() + target.size());
  auto it = last.find(key);
  result.count = (it == last.end()) ? BigInt(0) : it->second;
  result.log2_count = log2_big(result.count);

  if (options.conditional_marginals && result.count > 0) {
    const int n = array.n();
    const int dim = array.dim();
    // Backward counts: number of suffix completions from a state to the
    // target. backward[i] maps states after prefix i.
    std::vector<Layer> backward(n + 1);
    backward[n][key] = 1;
    for (int i = n - 1; i >= 0; --i) {
      for (const auto& [state, count] : layers[i]) {
        BigInt total = 0;
        std::vector<long long> successor(dim);
        for (int j = 0; j < array.num_letters(); ++j) {
          for (int d = 0; d < dim; ++d) successor[d] = state[d] + array.entry(i, j)[d];
          auto found = backward[i + 1].find(successor);
          if (found != backward[i + 1].end()) total += found->second;
        }
        if (total > 0) backward[i][state] = total;
      }
    }
    std::vector<std::vector<BigRat>> marginals(n);
    for (int i = 0; i < n; ++i) {
      marginals[i].assign(array.num_letters(), BigRat(0));
      std::vector<long long> successor(dim);
      for (const auto& [state, count] : layers[i]) {
        if (backward[i].find(state) == backward[i].end()) continue;
        for (int j = 0; j < array.num_letters(); ++j) {
          for (int d = 0; d < dim; ++d) successor[d] = state[d] + array.entry(i, j)[d];
          auto found = backward[i + 1].find(successor);
          if (found != backward[i + 1].end())
            marginals[i][j] += BigRat(count * found->second);
        }
      }
      for (auto& cell : marginals[i]) cell /= BigRat(result.count);
    }
    result.conditional_marginals = std::move(marginals);
  }
  return result;
}

std::vector<std::vector<int>> enumerate_fibre(const VectorArray& array, const IntVec& target,
                                              long long cap) {
  FibreCount total = count_fibre(array, target);
  if (total.count > cap)
    throw std::runtime_error("enumerate_fibre: fibre larger than cap (" + to_string(total.count) +
                             ")");
  const int n = array.n();
  const int dim = array.dim();
  std::vector<std::vector<long long>> lo, hi;
  suffix_extremes(array, lo, hi);

  std::vector<std::vector<int>> words;
  std::vector<int> word(n, 0);
  std::vector<long long> state(dim, 0);
  // DFS in letter-index order yields lexicographic output.
  auto dfs = [&](auto&& self, int i) -> void {
    if (i == n) {
      for (int d = 0; d < dim; ++d)
        if (state[d] != target[d]) return;
      words.push_back(word);
      return;
    }
    for (int j = 0; j < array.num_letters(); ++j) {
      for (int d = 0; d < dim; ++d) state[d] += array.entry(i, j)[d];
      if (reachable(state, target, lo[i + 1], hi[i + 1])) {
        word[i] = j;
        self(self, i + 1);
      }
      for (int d = 0; d < dim; ++d) state[d] -= array.entry(i, j)[d];
    }
  };
  dfs(dfs, 0);
  return words;
}

PairHistogram pair_histogram(const VectorArray& binary, const IntVec& z,
                             const std::optional<PairWindow>& window, bool include_diagonal,
                             long long fibre_cap) {
  if (!binary.is_binary()) throw std::invalid_argument("pair_histogram: need binary array");
  if (binary.n() > 63) throw std::invalid_argument("pair_histogram: n > 63 unsupported");
  const int n = binary.n();
  const int dim = binary.dim();
  std::vector<std::vector<int>> words = enumerate_fibre(binary, z, fibre_cap);

  PairHistogram histogram;
  histogram.fibre_size = BigInt(words.size());
  histogram.diagonal_included = include_diagonal;

  // Bitmask representation: intersections become AND.
  const std::size_t count = words.size();
  std::vector<std::uint64_t> masks(count, 0);
  for (std::size_t idx = 0; idx < count; ++idx)
    for (int i = 0; i < n; ++i)
      if (words[idx][i] == 1) masks[idx] |= (1ULL << i);

  std::vector<long long> key(dim);
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) {
      if (!include_diagonal && a == b) continue;
      std::uint64_t common = masks[a] & masks[b];
      std::fill(key.begin(), key.end(), 0);
      std::uint64_t bits = common;
      while (bits) {
        int i = std::countr_zero(bits);
        bits &= bits - 1;
        for (int d = 0; d < dim; ++d) key[d] += binary.entry(i, 1)[d];
      }
      if (window) {
        Vec diff(dim);
        for (int d = 0; d < dim; ++d)
          diff[d] = static_cast<double>(key[d] - window->centre[d]);
        if (r_norm(diff, binary.scaling()) > window->radius) continue;
      }
      histogram.counts[key] += 1;
    }
  }
  return histogram;
}

std::pair<IntVec, BigInt> popular_intersection(const VectorArray& binary, const IntVec& z) {
  PairHistogram histogram = pair_histogram(binary, z);
  if (histogram.counts.empty())
    throw std::runtime_error("popular_intersection: empty histogram (fibre has <= 1 element)");
  const std::vector<long long>* best_key = nullptr;
  const BigInt* best_count = nullptr;
  // std::map iterates keys in lexicographic order, so the first maximum is
  // the lexicographically smallest tie.
  for (const auto& [key, count] : histogram.counts) {
    if (!best_count || count > *best_count) {
      best_key = &key;
      best_count = &count;
    }
  }
  IntVec target(binary.dim());
  for (int d = 0; d < binary.dim(); ++d) target[d] = (*best_key)[d];
  return {target, *best_count};
}

LdpDeviation ldp_deviation(const VectorArray& array, const IntVec& target,
                           const CountOptions& options) {
  MaxEntSolution solution = solve_maxent(array, target);
  if (solution.status == SolveStatus::infeasible)
    throw std::runtime_error("ldp_deviation: maxent infeasible");
  FibreCount count = count_fibre(array, target, options);
  if (count.count == 0) throw std::runtime_error("ldp_deviation: empty fibre");
  LdpDeviation result;
  result.entropy_bits = solution.entropy_bits;
  result.log2_count = count.log2_count;
  result.deviation_bits = solution.entropy_bits - count.log2_count;
  return result;
}

BigInt factorial(long long n) {
  BigInt result = 1;
  for (long long i = 2; i <= n; ++i) result *= i;
  return result;
}

BigInt pattern_count(const std::vector<long long>& first, const std::vector<long long>& second,
                     const std::vector<std::vector<long long>>& pattern) {
  const std::size_t s = first.size();
  const std::size_t t = second.size();
  if (pattern.size() != s) throw std::invalid_argument("pattern_count: row count != |first|");
  long long n = 0;
  std::vector<long long> col_sums(t, 0);
  for (std::size_t j1 = 0; j1 < s; ++j1) {
    if (pattern[j1].size() != t) throw std::invalid_argument("pattern_count: column count != |second|");
    long long row = 0;
    for (std::size_t j2 = 0; j2 < t; ++j2) {
      if (pattern[j1][j2] < 0) throw std::invalid_argument("pattern_count: negative entry");
      row += pattern[j1][j2];
      col_sums[j2] += pattern[j1][j2];
      n += pattern[j1][j2];
    }
    if (row != first[j1]) throw std::invalid_argument("pattern_count: row sum != composition");
  }
  for (std::size_t j2 = 0; j2 < t; ++j2)
    if (col_sums[j2] != second[j2])
      throw std::invalid_argument("pattern_count: column sum != composition");
  BigInt result = factorial(n);
  for (std::size_t j1 = 0; j1 < s; ++j1)
    for (std::size_t j2 = 0; j2 < t; ++j2) result /= factorial(pattern[j1][j2]);
  return result;
}

VectorArray pattern_basis_array(int n, int s, int t) {
  const int dim = s * t;
  std::vector<std::string> alphabet;
  for (int j1 = 0; j1 < s; ++j1)
    for (int j2 = 0; j2 < t; ++j2)
      alphabet.push_back(std::to_string(j1) + "," + std::to_string(j2));
  std::vector<std::vector<IntVec>> entries(n);
  for (int i = 0; i < n; ++i) {
    entries[i].assign(dim, IntVec::Zero(dim));
    for (int cell = 0; cell < dim; ++cell) entries[i][cell][cell] = 1;
  }
  return VectorArray(n, alphabet, dim, std::move(entries), Vec::Ones(dim));
}

}  // namespace vecint
