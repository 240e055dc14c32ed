#include "vecint/measures.hpp"

namespace vecint {

double entropy(const ProductMeasure& mu) {
  const Mat& p = mu.probabilities();
  double acc = 0;
  for (int i = 0; i < p.rows(); ++i)
    for (int j = 0; j < p.cols(); ++j) acc += entropy_term(p(i, j));
  return acc;
}

double entropy(const PairMeasure& mu) {
  const Mat& q = mu.probabilities();
  double acc = 0;
  for (int i = 0; i < q.rows(); ++i)
    for (int j = 0; j < q.cols(); ++j) acc += entropy_term(q(i, j));
  return acc;
}

Vec expected_array_value(const VectorArray& array, const ProductMeasure& mu) {
  if (array.n() != mu.n() || array.num_letters() != mu.num_letters())
    throw std::invalid_argument("expected_array_value: shape mismatch");
  Vec total = Vec::Zero(array.dim());
  for (int i = 0; i < array.n(); ++i)
    for (int j = 0; j < array.num_letters(); ++j)
      total += mu.p(i, j) * array.entry(i, j).cast<double>();
  return total;
}

ProductMeasure marginal(const PairMeasure& mu, int side) {
  if (side != 1 && side != 2) throw std::invalid_argument("marginal: side must be 1 or 2");
  const int j1 = mu.num_letters1();
  const int j2 = mu.num_letters2();
  Mat p = Mat::Zero(mu.n(), side == 1 ? j1 : j2);
  for (int i = 0; i < mu.n(); ++i)
    for (int a = 0; a < j1; ++a)
      for (int b = 0; b < j2; ++b) p(i, side == 1 ? a : b) += mu.q(i, a, b);
  // Clean the tiny negative dust that cancellation can leave behind.
  p = p.cwiseMax(0.0);
  for (int i = 0; i < p.rows(); ++i) p.row(i) /= p.row(i).sum();
  return ProductMeasure(std::move(p));
}

double min_cell(const Mat& p) { return p.minCoeff(); }

bool is_kappa_bounded(const ProductMeasure& mu, double kappa) {
  const Mat& p = mu.probabilities();
  return p.minCoeff() >= kappa && p.maxCoeff() <= 1.0 - kappa;
}

bool is_kappa_bounded(const PairMeasure& mu, double kappa) {
  const Mat& q = mu.probabilities();
  return q.minCoeff() >= kappa && q.maxCoeff() <= 1.0 - kappa;
}

DensityReport density(const ProductMeasure& mu, double kappa) {
  DensityReport report;
  const Mat& p = mu.probabilities();
  for (int i = 0; i < p.rows(); ++i)
    if (p.row(i).minCoeff() >= kappa) ++report.dense_coordinates;
  report.dense = report.dense_coordinates >= kappa * mu.n();
  return report;
}

}  // namespace vecint
