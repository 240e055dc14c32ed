// Checkers and constructors for the structural hypotheses: generating sets,
// robust generation witnesses, robust genericity, transfers, and (universal)
// VC dimension. Searches are exact where budgets allow; heuristic modes are
// labelled as such in the reports.
#pragma once

#include "vecint/array.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace vecint {

// A representation v = sum_{i in S} (v[i][j_i] - v[i][j'_i]) using at most k
// distinct coordinates, all avoiding the forbidden set T.
struct GenerationWitness {
  struct Pick {
    int coordinate;
    int letter_plus;
    int letter_minus;
  };
  std::vector<Pick> picks;

  // For binary arrays: S = coordinates picked with (1,0), S' with (0,1).
  std::vector<int> plus_coordinates() const;
  std::vector<int> minus_coordinates() const;
};

// Re-verify a witness by exact integer arithmetic.
bool verify_witness(const VectorArray& array, const IntVec& target,
                    const GenerationWitness& witness);

// Axis-aligned generating set of the scale construction: for each dimension,
// R_d e_d together with the powers b^a e_d in [1, R_d], b = floor(beta n / (C D)).
// Any v decomposes with coefficients bounded by ||v||_R + beta n.
std::vector<IntVec> construct_generating_set(double beta, int n, const Vec& scaling, double c,
                                             int dim);

// Greedy decomposition over an axis-aligned generating set; returns the
// coefficients aligned with the set.
std::vector<long long> represent_over_generating_set(const IntVec& target,
                                                     const std::vector<IntVec>& generating);

// Search for a generation witness with |S| <= k avoiding T. Uses the
// closed-form decomposition for the Kalai array and meet-in-the-middle
// otherwise. Requires ||v||_R <= 1.
std::optional<GenerationWitness> find_generation_witness(const VectorArray& array,
                                                         const IntVec& target,
                                                         const std::set<int>& forbidden,
                                                         int k);

struct GeneratingCheckReport {
  std::string mode;  // "exhaustive" | "sampled"
  bool pass = false;
  long long targets_checked = 0;
  long long cases_checked = 0;
  struct Failure {
    IntVec target;
    std::vector<int> forbidden;
  };
  std::vector<Failure> failures;
};

struct GeneratingCheckOptions {
  long long target_cap = 20000;   // exhaustive target scan budget
  long long forbidden_cap = 2000;  // exhaustive T scan budget
  int sampled_forbidden = 24;      // sampled T sets per target otherwise
  std::uint64_t seed = 0;
};

// Checks gamma-robust (R,k)-generation: every ||v||_R <= 1 integer target
// must have a witness avoiding every T with |T| <= gamma n.
GeneratingCheckReport check_robust_generating(const VectorArray& array, double gamma, int k,
                                              const GeneratingCheckOptions& options = {});

struct GenericCheckReport {
  std::string mode;  // "exhaustive" | "kalai-closed-form" | "greedy-heuristic"
  bool pass = false;
  double best_det = 0;     // best |det| found inside the worst X
  double threshold = 0;    // gamma * prod R_d
  std::vector<int> witness_subset;   // the I achieving best_det
  std::vector<int> violating_set;    // the X with no generic I, when failing
};

// Checks gamma'-robust (gamma, R)-genericity: every X with |X| > gamma' n
// contains D coordinates whose determinant is >= gamma * prod R_d. With
// use_letter_pairs, per-coordinate rows are letter-pair differences
// (the extended-alphabet form restricted to +-1 coefficients).
GenericCheckReport check_generic(const VectorArray& array, double gamma, double gamma_prime,
                                 bool use_letter_pairs = false);

// Transfers in a pair-alphabet array (letters factored as J x L, letter
// index = j * |L| + l): u is an i-transfer when for some j, j', l, l'
//   v[i][(j,l)] - v[i][(j',l)] = u  and  v[i][(j',l')] = v[i][(j,l')].
struct TransferTable {
  struct Entry {
    IntVec u;
    std::vector<int> coordinates;  // the block P_m
    // witnessing (j, j', l, l') per coordinate, aligned with `coordinates`
    std::vector<std::array<int, 4>> witnesses;
  };
  std::vector<Entry> entries;
  double gamma = 0;  // min_m |P_m| / n
};

TransferTable find_transfers(const VectorArray& array, int j_letters, int l_letters,
                             const std::vector<IntVec>& transfer_set);

// Is u an i-transfer? Returns the witnessing quadruple if so.
std::optional<std::array<int, 4>> transfer_witness(const VectorArray& array, int j_letters,
                                                   int l_letters, int coordinate,
                                                   const IntVec& u);

// Exact VC machinery for explicit families of words.
bool shatters(const std::vector<std::vector<int>>& family, int num_letters,
              const std::vector<int>& subset);
int vc_dim(const std::vector<std::vector<int>>& family, int n, int num_letters);
int uvc_dim(const std::vector<std::vector<int>>& family, int n, int num_letters);

}  // namespace vecint
