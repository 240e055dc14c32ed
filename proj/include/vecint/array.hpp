// (n,J)-arrays of integer vectors in Z^D with a positive scaling R,
// the central combinatorial object. An array assigns a vector v[i][j] to
// every coordinate i in [n] and letter j in J; a word a in J^n has value
// V(a) = sum_i v[i][a_i].
#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <vector>

namespace vecint {

using IntVec = Eigen::Matrix<long long, Eigen::Dynamic, 1>;
using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Scaled sup-norm ||v||_R = max_d |v_d| / R_d.
template <typename Derived>
double r_norm(const Eigen::MatrixBase<Derived>& v, const Vec& scaling) {
  if (v.size() != scaling.size()) throw std::invalid_argument("r_norm: dimension mismatch");
  double best = 0;
  for (int d = 0; d < v.size(); ++d) {
    if (!(scaling[d] > 0)) throw std::invalid_argument("r_norm: scaling must be positive");
    best = std::max(best, std::abs(static_cast<double>(v[d])) / scaling[d]);
  }
  return best;
}

class VectorArray {
 public:
  VectorArray() = default;
  VectorArray(int n, std::vector<std::string> alphabet, int dim,
              std::vector<std::vector<IntVec>> entries, Vec scaling)
      : n_(n),
        dim_(dim),
        alphabet_(std::move(alphabet)),
        entries_(std::move(entries)),
        scaling_(std::move(scaling)) {
    validate();
  }

  int n() const { return n_; }
  int dim() const { return dim_; }
  int num_letters() const { return static_cast<int>(alphabet_.size()); }
  const std::vector<std::string>& alphabet() const { return alphabet_; }
  const Vec& scaling() const { return scaling_; }

  // Entry for coordinate i (0-based) and letter index j.
  const IntVec& entry(int i, int j) const { return entries_[i][j]; }

  int letter_index(const std::string& label) const {
    for (std::size_t j = 0; j < alphabet_.size(); ++j)
      if (alphabet_[j] == label) return static_cast<int>(j);
    throw std::invalid_argument("unknown letter: " + label);
  }

  // V(a) = sum_i v[i][a_i], exact in 64-bit (entries and n are desk-scale).
  IntVec value(const std::vector<int>& word) const {
    if (static_cast<int>(word.size()) != n_) throw std::invalid_argument("word length != n");
    IntVec total = IntVec::Zero(dim_);
    for (int i = 0; i < n_; ++i) {
      if (word[i] < 0 || word[i] >= num_letters()) throw std::invalid_argument("invalid letter");
      total += entries_[i][word[i]];
    }
    return total;
  }

  bool is_r_bounded() const {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < num_letters(); ++j)
        if (r_norm(entries_[i][j], scaling_) > 1.0 + 1e-12) return false;
    return true;
  }

  // Binary specialisation: letter "0" maps to the zero vector.
  bool is_binary() const {
    if (num_letters() != 2) return false;
    for (int i = 0; i < n_; ++i)
      if (!entries_[i][0].isZero()) return false;
    return true;
  }

 private:
  void validate() const {
    if (n_ <= 0) throw std::invalid_argument("array: n must be positive");
    if (alphabet_.size() < 2) throw std::invalid_argument("array: alphabet size must be >= 2");
    if (static_cast<int>(entries_.size()) != n_) throw std::invalid_argument("array: bad entry rows");
    if (scaling_.size() != dim_) throw std::invalid_argument("array: scaling size != D");
    for (int d = 0; d < dim_; ++d)
      if (!(scaling_[d] > 0)) throw std::invalid_argument("array: scaling must be positive");
    for (const auto& row : entries_) {
      if (row.size() != alphabet_.size()) throw std::invalid_argument("array: bad entry row size");
      for (const auto& v : row)
        if (v.size() != dim_) throw std::invalid_argument("array: entry dimension != D");
    }
  }

  int n_ = 0;
  int dim_ = 0;
  std::vector<std::string> alphabet_;
  std::vector<std::vector<IntVec>> entries_;  // entries_[i][j] in Z^D
  Vec scaling_;
};

// The Kalai fixture: v_i = (1, i) for i in [n], R = (1, n).
inline VectorArray kalai_array(int n) {
  std::vector<std::vector<IntVec>> entries(n);
  for (int i = 0; i < n; ++i) {
    IntVec zero = IntVec::Zero(2);
    IntVec one(2);
    one << 1, i + 1;
    entries[i] = {zero, one};
  }
  Vec scaling(2);
  scaling << 1.0, static_cast<double>(n);
  return VectorArray(n, {"0", "1"}, 2, std::move(entries), std::move(scaling));
}

// Binary array from a list of vectors: v[i][1] = vectors[i], v[i][0] = 0.
inline VectorArray binary_array(const std::vector<IntVec>& vectors, Vec scaling) {
  int n = static_cast<int>(vectors.size());
  int dim = static_cast<int>(scaling.size());
  std::vector<std::vector<IntVec>> entries(n);
  for (int i = 0; i < n; ++i) entries[i] = {IntVec::Zero(dim), vectors[i]};
  return VectorArray(n, {"0", "1"}, dim, std::move(entries), std::move(scaling));
}

// Pair-intersection array V_cap over {0,1}x{0,1}: the entry is v_i at
// letter (1,1) and zero otherwise. Pair letters are ordered
// (0,0),(0,1),(1,0),(1,1); index = 2*j1 + j2.
VectorArray intersection_array(const VectorArray& binary);

inline int pair_letter(int j1, int j2) { return 2 * j1 + j2; }

std::vector<std::string> pair_alphabet_labels();

}  // namespace vecint
