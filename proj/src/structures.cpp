#include "vecint/structures.hpp"

#include "vecint/rng.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

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

std::vector<long long> to_key(const IntVec& v) {
  return std::vector<long long>(v.data(), v.data() + v.size());
}

bool is_kalai(const VectorArray& array) {
  if (array.dim() != 2 || !array.is_binary()) return false;
  for (int i = 0; i < array.n(); ++i) {
    const IntVec& v = array.entry(i, 1);
    if (v[0] != 1 || v[1] != i + 1) return false;
  }
  return std::abs(array.scaling()[0] - 1.0) < 1e-12 &&
         std::abs(array.scaling()[1] - array.n()) < 1e-12;
}

}  // namespace

std::vector<int> GenerationWitness::plus_coordinates() const {
  std::vector<int> out;
  for (const auto& pick : picks)
    if (pick.letter_plus == 1 && pick.letter_minus == 0) out.push_back(pick.coordinate);
  return out;
}

std::vector<int> GenerationWitness::minus_coordinates() const {
  std::vector<int> out;
  for (const auto& pick : picks)
    if (pick.letter_plus == 0 && pick.letter_minus == 1) out.push_back(pick.coordinate);
  return out;
}

bool verify_witness(const VectorArray& array, const IntVec& target,
                    const GenerationWitness& witness) {
  IntVec sum = IntVec::Zero(array.dim());
  std::set<int> seen;
  for (const auto& pick : witness.picks) {
    if (!seen.insert(pick.coordinate).second) return false;  // coordinates must be distinct
    sum += array.entry(pick.coordinate, pick.letter_plus) -
           array.entry(pick.coordinate, pick.letter_minus);
  }
  return sum == target;
}

std::vector<IntVec> construct_generating_set(double beta, int n, const Vec& scaling, double c,
                                             int dim) {
  if (!(beta > 0 && beta < 1)) throw std::invalid_argument("construct_generating_set: beta in (0,1)");
  for (int d = 0; d < dim; ++d)
    if (scaling[d] >= std::pow(static_cast<double>(n), c) + 1e-9)
      throw std::invalid_argument("construct_generating_set: max R_d < n^C violated");
  long long base = static_cast<long long>(std::floor(beta * n / (c * dim)));
  if (base < 2) throw std::invalid_argument("construct_generating_set: digit base below 2");
  std::vector<IntVec> result;
  for (int d = 0; d < dim; ++d) {
    long long r = static_cast<long long>(std::floor(scaling[d]));
    std::vector<long long> values;
    values.push_back(r);
    for (long long power = 1; power <= r; power *= base) {
      values.push_back(power);
      if (power > r / base) break;
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    // The size bound |U| <= D (C + 2) needs the digit base to reach R_d in
    // C + 1 steps; smaller bases fall outside the construction's regime.
    if (static_cast<double>(values.size()) > c + 2)
      throw std::invalid_argument(
          "construct_generating_set: parameter range (digit base too small for the ladder)");
    for (long long value : values) {
      IntVec u = IntVec::Zero(dim);
      u[d] = value;
      result.push_back(u);
    }
  }
  return result;
}

std::vector<long long> represent_over_generating_set(const IntVec& target,
                                                     const std::vector<IntVec>& generating) {
  const int dim = static_cast<int>(target.size());
  std::vector<long long> coefficients(generating.size(), 0);
  for (int d = 0; d < dim; ++d) {
    // Per-axis values available for this dimension, largest first.
    std::vector<std::pair<long long, std::size_t>> axis;
    for (std::size_t idx = 0; idx < generating.size(); ++idx)
      if (generating[idx][d] != 0) axis.push_back({generating[idx][d], idx});
    std::sort(axis.rbegin(), axis.rend());
    if (axis.empty()) {
      if (target[d] != 0) throw std::runtime_error("represent: missing axis generator");
      continue;
    }
    long long remainder = target[d];
    // Leading coefficient on R_d e_d, then greedy base-b digits.
    for (const auto& [value, idx] : axis) {
      long long q = remainder / value;
      coefficients[idx] += q;
      remainder -= q * value;
    }
    if (remainder != 0) throw std::runtime_error("represent: no unit generator");
  }
  // Exactness check.
  IntVec sum = IntVec::Zero(dim);
  for (std::size_t idx = 0; idx < generating.size(); ++idx)
    sum += coefficients[idx] * generating[idx];
  if (sum != target) throw std::runtime_error("represent: decomposition failed");
  return coefficients;
}

namespace {

// Constructive witness for the Kalai vectors (1, i): a target (a, b) with
// |a| <= 1, |b| <= n is covered by at most one single pick plus two
// difference pairs, 7 coordinates in the worst case.
std::optional<GenerationWitness> kalai_witness(const VectorArray& array, const IntVec& target,
                                               const std::set<int>& forbidden) {
  const int n = array.n();
  std::set<int> used(forbidden);  // 1-based indices below; stored 0-based
  GenerationWitness witness;

  auto free_at = [&](long long index) {
    return index >= 1 && index <= n && !used.count(static_cast<int>(index - 1));
  };
  auto take = [&](long long index, bool plus) {
    used.insert(static_cast<int>(index - 1));
    witness.picks.push_back({static_cast<int>(index - 1), plus ? 1 : 0, plus ? 0 : 1});
  };
  // A pair contributing (0, diff): +pick at i2 + diff, -pick at i2.
  auto take_pair = [&](long long diff) -> bool {
    if (diff == 0) return true;
    long long mag = std::abs(diff);
    for (long long low = 1; low + mag <= n; ++low) {
      if (free_at(low) && free_at(low + mag)) {
        take(diff > 0 ? low + mag : low, true);
        take(diff > 0 ? low : low + mag, false);
        return true;
      }
    }
    return false;
  };

  long long a = target[0];
  long long b = target[1];
  if (a != 0) {
    // Single signed pick near b (or near the low end when b is outside).
    long long want = std::clamp(a > 0 ? b : -b, 1LL, static_cast<long long>(n));
    long long pick = -1;
    for (long long offset = 0; offset < n; ++offset) {
      if (free_at(want - offset)) { pick = want - offset; break; }
      if (free_at(want + offset)) { pick = want + offset; break; }
    }
    if (pick < 0) return std::nullopt;
    take(pick, a > 0);
    b -= a * pick;
  }
  // Remainder (0, b): split into at most two differences of magnitude < n.
  long long first = (std::abs(b) <= n - 1) ? b : b / 2;
  if (!take_pair(first)) return std::nullopt;
  if (!take_pair(b - first)) return std::nullopt;
  if (!verify_witness(array, target, witness)) return std::nullopt;
  return witness;
}

struct ComboSearch {
  const VectorArray& array;
  const std::vector<int>& coords;
  std::unordered_map<std::vector<long long>, std::vector<GenerationWitness::Pick>, KeyHash>* map =
      nullptr;  // when filling
  long long budget;
  long long visited = 0;

  // Enumerate signed pick combinations of at most max_picks coordinates in
  // coords[from..], invoking sink on each partial sum.
  template <typename Sink>
  bool enumerate(std::size_t from, int max_picks, IntVec& sum,
                 std::vector<GenerationWitness::Pick>& picks, Sink&& sink) {
    if (++visited > budget) return false;
    if (!sink(sum, picks)) return false;
    if (max_picks == 0) return true;
    for (std::size_t at = from; at < coords.size(); ++at) {
      int i = coords[at];
      for (int j = 0; j < array.num_letters(); ++j) {
        for (int jp = 0; jp < array.num_letters(); ++jp) {
          if (j == jp) continue;
          IntVec diff = array.entry(i, j) - array.entry(i, jp);
          if (diff.isZero()) continue;
          sum += diff;
          picks.push_back({i, j, jp});
          bool keep = enumerate(at + 1, max_picks - 1, sum, picks, sink);
          picks.pop_back();
          sum -= diff;
          if (!keep) return false;
        }
      }
    }
    return true;
  }
};

std::optional<GenerationWitness> mitm_witness(const VectorArray& array, const IntVec& target,
                                              const std::set<int>& forbidden, int k,
                                              long long budget = 6000000) {
  std::vector<int> free;
  for (int i = 0; i < array.n(); ++i)
    if (!forbidden.count(i)) free.push_back(i);
  std::vector<int> half_a(free.begin(), free.begin() + free.size() / 2);
  std::vector<int> half_b(free.begin() + free.size() / 2, free.end());

  // Two passes: map one half to depth ceil(k/2), stream the other to k.
  for (int pass = 0; pass < 2; ++pass) {
    const std::vector<int>& map_half = pass == 0 ? half_a : half_b;
    const std::vector<int>& stream_half = pass == 0 ? half_b : half_a;
    std::unordered_map<std::vector<long long>, std::vector<GenerationWitness::Pick>, KeyHash>
        table;
    ComboSearch filler{array, map_half, nullptr, budget};
    IntVec sum = IntVec::Zero(array.dim());
    std::vector<GenerationWitness::Pick> picks;
    bool complete = filler.enumerate(
        0, (k + 1) / 2, sum, picks,
        [&](const IntVec& s, const std::vector<GenerationWitness::Pick>& p) {
          auto key = to_key(s);
          auto it = table.find(key);
          if (it == table.end() || it->second.size() > p.size()) table[key] = p;
          return true;
        });
    if (!complete) return std::nullopt;

    std::optional<GenerationWitness> found;
    ComboSearch streamer{array, stream_half, nullptr, budget};
    IntVec sum2 = IntVec::Zero(array.dim());
    std::vector<GenerationWitness::Pick> picks2;
    streamer.enumerate(0, k, sum2, picks2,
                       [&](const IntVec& s, const std::vector<GenerationWitness::Pick>& p) {
                         IntVec need = target - s;
                         auto it = table.find(to_key(need));
                         if (it != table.end() &&
                             static_cast<int>(it->second.size() + p.size()) <= k) {
                           GenerationWitness witness;
                           witness.picks = it->second;
                           witness.picks.insert(witness.picks.end(), p.begin(), p.end());
                           found = witness;
                           return false;  // stop at the first hit
                         }
                         return true;
                       });
    if (found && verify_witness(array, target, *found)) return found;
  }
  return std::nullopt;
}

}  // namespace

std::optional<GenerationWitness> find_generation_witness(const VectorArray& array,
                                                         const IntVec& target,
                                                         const std::set<int>& forbidden,
                                                         int k) {
  if (r_norm(target, array.scaling()) > 1.0 + 1e-12)
    throw std::invalid_argument("find_generation_witness: ||v||_R > 1");
  if (is_kalai(array)) {
    auto witness = kalai_witness(array, target, forbidden);
    if (witness && static_cast<int>(witness->picks.size()) <= k) return witness;
  }
  return mitm_witness(array, target, forbidden, k);
}

namespace {

// All integer vectors with ||v||_R <= 1 when the box is small; otherwise a
// deterministic sample plus the axis extremes.
std::vector<IntVec> target_list(const VectorArray& array, long long cap, Rng& rng,
                                bool& exhaustive) {
  const int dim = array.dim();
  const Vec& scaling = array.scaling();
  double box = 1;
  for (int d = 0; d < dim; ++d) box *= 2 * std::floor(scaling[d]) + 1;
  std::vector<IntVec> targets;
  if (box <= static_cast<double>(cap)) {
    exhaustive = true;
    IntVec v = IntVec::Zero(dim);
    for (int d = 0; d < dim; ++d) v[d] = -static_cast<long long>(std::floor(scaling[d]));
    for (;;) {
      if (r_norm(v, scaling) <= 1.0) targets.push_back(v);
      int d = 0;
      while (d < dim) {
        if (v[d] < static_cast<long long>(std::floor(scaling[d]))) {
          ++v[d];
          break;
        }
        v[d] = -static_cast<long long>(std::floor(scaling[d]));
        ++d;
      }
      if (d == dim) break;
    }
  } else {
    exhaustive = false;
    for (int d = 0; d < dim; ++d) {
      IntVec v = IntVec::Zero(dim);
      v[d] = static_cast<long long>(std::floor(scaling[d]));
      targets.push_back(v);
      targets.push_back((-v).eval());
    }
    for (long long s = 0; s < cap / 10; ++s) {
      IntVec v(dim);
      for (int d = 0; d < dim; ++d) {
        long long r = static_cast<long long>(std::floor(scaling[d]));
        v[d] = static_cast<long long>(rng.next_below(2 * r + 1)) - r;
      }
      if (r_norm(v, scaling) <= 1.0) targets.push_back(v);
    }
  }
  return targets;
}

}  // namespace

GeneratingCheckReport check_robust_generating(const VectorArray& array, double gamma, int k,
                                              const GeneratingCheckOptions& options) {
  GeneratingCheckReport report;
  Rng rng(options.seed);
  const int n = array.n();
  const int t_size = static_cast<int>(std::floor(gamma * n));

  bool exhaustive_targets = false;
  std::vector<IntVec> targets = target_list(array, options.target_cap, rng, exhaustive_targets);
  report.targets_checked = static_cast<long long>(targets.size());

  // Forbidden sets: exhaustive when the count is small, otherwise random
  // samples, contiguous blocks, and an adaptive adversary that forbids the
  // coordinates of previous witnesses.
  double total_t = 1;
  for (int c = 1; c <= t_size; ++c) {
    total_t *= static_cast<double>(n - c + 1) / c;
    if (total_t > 1e12) break;
  }
  bool exhaustive_t = t_size == 0 || total_t + 1 <= static_cast<double>(options.forbidden_cap);
  report.mode = (exhaustive_targets && exhaustive_t) ? "exhaustive" : "sampled";

  auto run_case = [&](const IntVec& target, const std::set<int>& forbidden) {
    ++report.cases_checked;
    auto witness = find_generation_witness(array, target, forbidden, k);
    if (!witness || !verify_witness(array, target, *witness) ||
        static_cast<int>(witness->picks.size()) > k) {
      GeneratingCheckReport::Failure failure;
      failure.target = target;
      failure.forbidden.assign(forbidden.begin(), forbidden.end());
      report.failures.push_back(std::move(failure));
      return std::optional<GenerationWitness>();
    }
    for (const auto& pick : witness->picks)
      if (forbidden.count(pick.coordinate))
        throw std::logic_error("witness used a forbidden coordinate");
    return witness;
  };

  for (const IntVec& target : targets) {
    if (exhaustive_t) {
      // A witness avoiding T avoids every subset of T, so scanning the
      // maximal sets |T| = t_size covers all smaller ones.
      std::vector<int> subset;
      auto recurse = [&](auto&& self, int from, int remaining) -> void {
        if (remaining == 0) {
          run_case(target, std::set<int>(subset.begin(), subset.end()));
          return;
        }
        for (int i = from; i + remaining <= n; ++i) {
          subset.push_back(i);
          self(self, i + 1, remaining - 1);
          subset.pop_back();
        }
      };
      if (t_size == 0) run_case(target, {});
      else recurse(recurse, 0, t_size);
    } else {
      run_case(target, {});
      // Contiguous blocks.
      for (int start : {0, n / 2, n - t_size}) {
        std::set<int> block;
        for (int i = 0; i < t_size; ++i) block.insert(std::min(n - 1, start + i));
        run_case(target, block);
      }
      // Random samples.
      for (int trial = 0; trial < options.sampled_forbidden; ++trial) {
        std::set<int> forbidden;
        while (static_cast<int>(forbidden.size()) < t_size)
          forbidden.insert(static_cast<int>(rng.next_below(n)));
        run_case(target, forbidden);
      }
      // Adaptive adversary: forbid the coordinates the witnesses keep using.
      std::set<int> adaptive;
      while (static_cast<int>(adaptive.size()) < t_size) {
        auto witness = find_generation_witness(array, target, adaptive, k);
        if (!witness || witness->picks.empty()) break;
        std::size_t before = adaptive.size();
        for (const auto& pick : witness->picks) {
          if (static_cast<int>(adaptive.size()) >= t_size) break;
          adaptive.insert(pick.coordinate);
        }
        if (adaptive.size() == before) break;
      }
      run_case(target, adaptive);
    }
  }
  report.pass = report.failures.empty();
  return report;
}

namespace {

double subset_best_det(const VectorArray& array, const std::vector<int>& subset, int dim,
                       bool use_letter_pairs, std::vector<int>* best_i) {
  // Candidate rows per coordinate.
  auto rows_for = [&](int i) {
    std::vector<Vec> rows;
    if (use_letter_pairs) {
      for (int j = 0; j < array.num_letters(); ++j)
        for (int jp = j + 1; jp < array.num_letters(); ++jp)
          rows.push_back((array.entry(i, j) - array.entry(i, jp)).cast<double>());
    } else {
      rows.push_back(array.entry(i, 1).cast<double>());
    }
    return rows;
  };
  double best = 0;
  std::vector<int> chosen;
  std::vector<int> stack;
  auto recurse = [&](auto&& self, std::size_t from, int remaining) -> void {
    if (remaining == 0) {
      // Best |det| over candidate-row choices for this I.
      std::vector<std::vector<Vec>> options;
      for (int i : stack) options.push_back(rows_for(i));
      std::vector<int> pick(stack.size(), 0);
      for (;;) {
        Mat m(dim, dim);
        for (int r = 0; r < dim; ++r) m.row(r) = options[r][pick[r]].transpose();
        double det = std::abs(m.determinant());
        if (det > best) {
          best = det;
          chosen = stack;
        }
        std::size_t d = 0;
        while (d < pick.size() && ++pick[d] == static_cast<int>(options[d].size())) pick[d++] = 0;
        if (d == pick.size()) break;
      }
      return;
    }
    for (std::size_t at = from; at + remaining <= subset.size() + 0; ++at) {
      if (at >= subset.size()) break;
      stack.push_back(subset[at]);
      self(self, at + 1, remaining - 1);
      stack.pop_back();
    }
  };
  recurse(recurse, 0, dim);
  if (best_i) *best_i = chosen;
  return best;
}

}  // namespace

GenericCheckReport check_generic(const VectorArray& array, double gamma, double gamma_prime,
                                 bool use_letter_pairs) {
  GenericCheckReport report;
  const int n = array.n();
  const int dim = array.dim();
  double threshold = gamma;
  for (int d = 0; d < dim; ++d) threshold *= array.scaling()[d];
  report.threshold = threshold;
  int m = static_cast<int>(std::floor(gamma_prime * n)) + 1;
  m = std::min(m, n);
  if (m < dim) {
    report.mode = "exhaustive";
    report.pass = false;
    return report;
  }

  if (is_kalai(array) && !use_letter_pairs) {
    // Any m distinct indices span at least m - 1; the contiguous block is
    // the exact worst case, with |det((1,i),(1,i'))| = |i - i'|.
    report.mode = "kalai-closed-form";
    std::vector<int> block(m);
    for (int i = 0; i < m; ++i) block[i] = i;
    report.best_det = subset_best_det(array, block, dim, false, &report.witness_subset);
    report.pass = report.best_det >= threshold;
    if (!report.pass) report.violating_set = block;
    return report;
  }

  // Exhaustive over X of size m when affordable: larger X only gain
  // candidate subsets, so size-m sets are the adversary's best choice.
  double combinations = 1;
  for (int c = 1; c <= m; ++c) {
    combinations *= static_cast<double>(n - c + 1) / c;
    if (combinations > 2e5) break;
  }
  if (combinations <= 2e5) {
    report.mode = "exhaustive";
    report.pass = true;
    report.best_det = std::numeric_limits<double>::infinity();
    std::vector<int> subset;
    auto recurse = [&](auto&& self, int from, int remaining) -> bool {
      if (remaining == 0) {
        std::vector<int> witness;
        double best = subset_best_det(array, subset, dim, use_letter_pairs, &witness);
        if (best < report.best_det) {
          report.best_det = best;
          report.witness_subset = witness;
          if (best < threshold) {
            report.pass = false;
            report.violating_set = subset;
            return false;
          }
        }
        return true;
      }
      for (int i = from; i + remaining <= n; ++i) {
        subset.push_back(i);
        bool keep = self(self, i + 1, remaining - 1);
        subset.pop_back();
        if (!keep) return false;
      }
      return true;
    };
    recurse(recurse, 0, m);
    return report;
  }

  // Greedy adversarial heuristic: grow X keeping the achievable
  // determinants as small as possible.
  report.mode = "greedy-heuristic";
  std::vector<int> x;
  std::vector<char> taken(n, 0);
  // Seed with the pair minimising the best determinant.
  double seed_best = std::numeric_limits<double>::infinity();
  std::pair<int, int> seed{0, 1};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<int> pair{i, j};
      if (static_cast<int>(pair.size()) < dim) continue;
      double det = subset_best_det(array, pair, dim, use_letter_pairs, nullptr);
      if (det < seed_best) {
        seed_best = det;
        seed = {i, j};
      }
    }
  x = {seed.first, seed.second};
  taken[seed.first] = taken[seed.second] = 1;
  while (static_cast<int>(x.size()) < m) {
    int best_i = -1;
    double best_val = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
      if (taken[i]) continue;
      x.push_back(i);
      double val = subset_best_det(array, x, dim, use_letter_pairs, nullptr);
      x.pop_back();
      if (val < best_val) {
        best_val = val;
        best_i = i;
      }
    }
    x.push_back(best_i);
    taken[best_i] = 1;
  }
  std::sort(x.begin(), x.end());
  report.best_det = subset_best_det(array, x, dim, use_letter_pairs, &report.witness_subset);
  report.pass = report.best_det >= threshold;
  if (!report.pass) report.violating_set = x;
  return report;
}

std::optional<std::array<int, 4>> transfer_witness(const VectorArray& array, int j_letters,
                                                   int l_letters, int coordinate,
                                                   const IntVec& u) {
  if (j_letters * l_letters != array.num_letters())
    throw std::invalid_argument("transfer_witness: alphabet does not factor as J x L");
  auto entry = [&](int j, int l) -> const IntVec& {
    return array.entry(coordinate, j * l_letters + l);
  };
  for (int j = 0; j < j_letters; ++j)
    for (int jp = 0; jp < j_letters; ++jp) {
      if (j == jp) continue;
      for (int l = 0; l < l_letters; ++l) {
        if ((entry(j, l) - entry(jp, l)) != u) continue;
        for (int lp = 0; lp < l_letters; ++lp) {
          if (entry(jp, lp) == entry(j, lp)) return std::array<int, 4>{j, jp, l, lp};
        }
      }
    }
  return std::nullopt;
}

TransferTable find_transfers(const VectorArray& array, int j_letters, int l_letters,
                             const std::vector<IntVec>& transfer_set) {
  TransferTable table;
  const int n = array.n();
  const std::size_t m = transfer_set.size();
  std::vector<std::vector<std::optional<std::array<int, 4>>>> witness(m);
  std::vector<std::vector<char>> candidate(m, std::vector<char>(n, 0));
  for (std::size_t idx = 0; idx < m; ++idx) {
    witness[idx].resize(n);
    for (int i = 0; i < n; ++i) {
      witness[idx][i] = transfer_witness(array, j_letters, l_letters, i, transfer_set[idx]);
      candidate[idx][i] = witness[idx][i].has_value();
    }
  }
  // Greedy balanced assignment: each coordinate goes to the feasible block
  // that is currently smallest (ties by block index).
  std::vector<std::vector<int>> blocks(m);
  for (int i = 0; i < n; ++i) {
    int best = -1;
    for (std::size_t idx = 0; idx < m; ++idx) {
      if (!candidate[idx][i]) continue;
      if (best < 0 || blocks[idx].size() < blocks[best].size()) best = static_cast<int>(idx);
    }
    if (best >= 0) blocks[best].push_back(i);
  }
  std::size_t min_block = n;
  for (std::size_t idx = 0; idx < m; ++idx) {
    TransferTable::Entry entry;
    entry.u = transfer_set[idx];
    entry.coordinates = blocks[idx];
    for (int i : blocks[idx]) entry.witnesses.push_back(*witness[idx][i]);
    min_block = std::min(min_block, blocks[idx].size());
    table.entries.push_back(std::move(entry));
  }
  table.gamma = m == 0 ? 0.0 : static_cast<double>(min_block) / n;
  return table;
}

bool shatters(const std::vector<std::vector<int>>& family, int num_letters,
              const std::vector<int>& subset) {
  if (subset.empty()) return !family.empty();
  double needed_d = std::pow(static_cast<double>(num_letters), static_cast<double>(subset.size()));
  if (needed_d > 1e18 || static_cast<double>(family.size()) < needed_d) return false;
  const std::uint64_t needed = static_cast<std::uint64_t>(needed_d);
  std::unordered_set<std::uint64_t> seen;
  for (const auto& word : family) {
    std::uint64_t pattern = 0;
    for (int x : subset) pattern = pattern * num_letters + word[x];
    seen.insert(pattern);
    if (seen.size() == needed) return true;
  }
  return false;
}

namespace {

// Shattered sets form a downward-closed family, so level k can be built by
// extending level k-1 with a larger index.
std::vector<std::vector<std::vector<int>>> shattered_levels(
    const std::vector<std::vector<int>>& family, int n, int num_letters, long long budget) {
  std::vector<std::vector<std::vector<int>>> levels;
  levels.push_back({{}});  // the empty set, shattered by any nonempty family
  if (family.empty()) return levels;
  long long work = 0;
  for (int k = 1; k <= n; ++k) {
    if (std::pow(static_cast<double>(num_letters), k) > static_cast<double>(family.size()))
      break;  // Sauer-Shelah style prune: |A| >= |J|^k is necessary
    std::vector<std::vector<int>> level;
    for (const auto& base : levels[k - 1]) {
      int start = base.empty() ? 0 : base.back() + 1;
      for (int next = start; next < n; ++next) {
        std::vector<int> candidate = base;
        candidate.push_back(next);
        work += static_cast<long long>(family.size());
        if (work > budget) throw std::runtime_error("vc_dim: search budget exceeded");
        if (shatters(family, num_letters, candidate)) level.push_back(std::move(candidate));
      }
    }
    if (level.empty()) break;
    levels.push_back(std::move(level));
  }
  return levels;
}

}  // namespace

int vc_dim(const std::vector<std::vector<int>>& family, int n, int num_letters) {
  if (family.empty()) return 0;  // empty family: vc 0 by convention
  auto levels = shattered_levels(family, n, num_letters, 2000000000LL);
  return static_cast<int>(levels.size()) - 1;
}

int uvc_dim(const std::vector<std::vector<int>>& family, int n, int num_letters) {
  if (family.empty()) return 0;
  auto levels = shattered_levels(family, n, num_letters, 2000000000LL);
  int result = 0;
  for (std::size_t k = 1; k < levels.size(); ++k) {
    double choose = 1;
    for (std::size_t c = 1; c <= k; ++c)
      choose *= static_cast<double>(n - c + 1) / static_cast<double>(c);
    if (static_cast<double>(levels[k].size()) >= choose - 0.5)
      result = static_cast<int>(k);
    else
      break;
  }
  return result;
}

}  // namespace vecint
