// Product measures on J^n and on pair alphabets (J1 x J2)^n, with entropy
// in bits, expectations of array values, marginal extraction and the
// kappa-boundedness / kappa-density predicates. All types are immutable
// value types; every operation is pure.
#pragma once

#include "vecint/array.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace vecint {

// L(p) = -p log2 p with L(0) = 0 by continuity.
template <typename Scalar>
Scalar entropy_term(Scalar p) {
  return p > Scalar(0) ? -p * std::log2(p) : Scalar(0);
}

// Binary entropy in bits.
template <typename Scalar>
Scalar binary_entropy(Scalar p) {
  return entropy_term(p) + entropy_term(Scalar(1) - p);
}

class ProductMeasure {
 public:
  ProductMeasure() = default;
  // p(i, j) = probability of letter j at coordinate i; rows must sum to 1
  // within 1e-12 (exact-count paths never go through this type).
  explicit ProductMeasure(Mat p) : p_(std::move(p)) { validate(); }

  int n() const { return static_cast<int>(p_.rows()); }
  int num_letters() const { return static_cast<int>(p_.cols()); }
  const Mat& probabilities() const { return p_; }
  double p(int i, int j) const { return p_(i, j); }

  double log_mass(const std::vector<int>& word) const {
    if (static_cast<int>(word.size()) != n()) throw std::invalid_argument("word length != n");
    double acc = 0;
    for (int i = 0; i < n(); ++i) acc += std::log2(p_(i, word[i]));
    return acc;  // -inf when some letter has zero mass
  }

  double mass(const std::vector<int>& word) const {
    double acc = 1;
    for (int i = 0; i < n(); ++i) acc *= p_(i, word[i]);
    return acc;
  }

  static ProductMeasure uniform(int n, int num_letters) {
    return ProductMeasure(Mat::Constant(n, num_letters, 1.0 / num_letters));
  }

  static ProductMeasure point_mass(int n, int num_letters, const std::vector<int>& word) {
    Mat p = Mat::Zero(n, num_letters);
    for (int i = 0; i < n; ++i) p(i, word[i]) = 1.0;
    return ProductMeasure(p);
  }

 private:
  void validate() const {
    for (int i = 0; i < p_.rows(); ++i) {
      double row = 0;
      for (int j = 0; j < p_.cols(); ++j) {
        if (p_(i, j) < -1e-15 || p_(i, j) > 1 + 1e-12)
          throw std::invalid_argument("measure: probability out of [0,1]");
        row += p_(i, j);
      }
      if (std::abs(row - 1.0) > 1e-12) throw std::invalid_argument("measure: row sum != 1");
    }
  }

  Mat p_;
};

// Product measure on (J1 x J2)^n; column index is j1 * |J2| + j2.
class PairMeasure {
 public:
  PairMeasure() = default;
  PairMeasure(Mat q, int j1, int j2) : q_(std::move(q)), j1_(j1), j2_(j2) {
    if (q_.cols() != j1_ * j2_) throw std::invalid_argument("pair measure: shape mismatch");
    ProductMeasure check(q_);  // row-sum validation
  }

  int n() const { return static_cast<int>(q_.rows()); }
  int num_letters1() const { return j1_; }
  int num_letters2() const { return j2_; }
  const Mat& probabilities() const { return q_; }
  double q(int i, int a, int b) const { return q_(i, a * j2_ + b); }

  static PairMeasure independent(const ProductMeasure& p1, const ProductMeasure& p2) {
    if (p1.n() != p2.n()) throw std::invalid_argument("pair measure: n mismatch");
    Mat q(p1.n(), p1.num_letters() * p2.num_letters());
    for (int i = 0; i < p1.n(); ++i)
      for (int a = 0; a < p1.num_letters(); ++a)
        for (int b = 0; b < p2.num_letters(); ++b)
          q(i, a * p2.num_letters() + b) = p1.p(i, a) * p2.p(i, b);
    return PairMeasure(std::move(q), p1.num_letters(), p2.num_letters());
  }

 private:
  Mat q_;
  int j1_ = 0, j2_ = 0;
};

// A fibre (J^n)^V_w = { a : V(a) = w }.
struct Fibre {
  VectorArray array;
  IntVec target;
};

// H(mu) in bits, sum over coordinates of row entropies.
double entropy(const ProductMeasure& mu);
double entropy(const PairMeasure& mu);

// V(mu) = E_{a~mu} V(a).
Vec expected_array_value(const VectorArray& array, const ProductMeasure& mu);

// s-marginal of a pair measure (side is 1 or 2).
ProductMeasure marginal(const PairMeasure& mu, int side);

// kappa-bounded: all cell probabilities in [kappa, 1-kappa].
bool is_kappa_bounded(const ProductMeasure& mu, double kappa);
bool is_kappa_bounded(const PairMeasure& mu, double kappa);
double min_cell(const Mat& p);

// kappa-dense: at least kappa*n coordinates where every letter has mass
// >= kappa. Returns the verdict and the witnessing coordinate count.
struct DensityReport {
  bool dense = false;
  int dense_coordinates = 0;
};
DensityReport density(const ProductMeasure& mu, double kappa);

}  // namespace vecint
