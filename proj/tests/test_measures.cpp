#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vecint/array.hpp"
#include "vecint/measures.hpp"
#include "vecint/rng.hpp"

#include <cmath>

using namespace vecint;

namespace {

IntVec ivec(std::initializer_list<long long> values) {
  IntVec v(static_cast<int>(values.size()));
  int i = 0;
  for (long long value : values) v[i++] = value;
  return v;
}

Vec dvec(std::initializer_list<double> values) {
  Vec v(static_cast<int>(values.size()));
  int i = 0;
  for (double value : values) v[i++] = value;
  return v;
}

// Random measure with rows summing to one.
ProductMeasure random_measure(int n, int letters, Rng& rng) {
  Mat p(n, letters);
  for (int i = 0; i < n; ++i) {
    double total = 0;
    for (int j = 0; j < letters; ++j) {
      p(i, j) = 0.05 + rng.next_double();
      total += p(i, j);
    }
    p.row(i) /= total;
  }
  return ProductMeasure(p);
}

}  // namespace

TEST_CASE("r_norm basics") {
  CHECK(r_norm(ivec({0, 0, 0}), dvec({1, 2, 3})) == 0.0);
  // Kalai scaling: v = (1, n), R = (1, n).
  CHECK(r_norm(ivec({1, 30}), dvec({1, 30})) == doctest::Approx(1.0));
  CHECK(r_norm(ivec({3, -10}), dvec({2, 5})) == doctest::Approx(2.0));
  CHECK_THROWS_AS(r_norm(ivec({1}), dvec({1, 2})), std::invalid_argument);
}

TEST_CASE("array_value on the Kalai array") {
  VectorArray kalai = kalai_array(4);
  CHECK(kalai.is_r_bounded());
  CHECK(kalai.is_binary());
  // a = 0101 selects {2, 4}.
  IntVec value = kalai.value({0, 1, 0, 1});
  CHECK(value[0] == 2);
  CHECK(value[1] == 6);
  // Empty set.
  IntVec zero = kalai.value({0, 0, 0, 0});
  CHECK(zero[0] == 0);
  CHECK(zero[1] == 0);
  // Full set at n = 3.
  VectorArray small = kalai_array(3);
  IntVec full = small.value({1, 1, 1});
  CHECK(full[0] == 3);
  CHECK(full[1] == 6);
  CHECK_THROWS(kalai.value({0, 1, 2, 0}));
}

TEST_CASE("entropy in bits") {
  CHECK(entropy(ProductMeasure::uniform(7, 2)) == doctest::Approx(7.0));
  CHECK(entropy(ProductMeasure::point_mass(5, 3, {0, 1, 2, 0, 1})) == doctest::Approx(0.0));
  // p_i = 0.25 on {0,1}^4: 4 * H(1/4) = 4 * (2 - 0.75 log2 3).
  Mat p(4, 2);
  for (int i = 0; i < 4; ++i) {
    p(i, 1) = 0.25;
    p(i, 0) = 0.75;
  }
  double expected = 4 * (-0.25 * std::log2(0.25) - 0.75 * std::log2(0.75));
  CHECK(expected == doctest::Approx(3.2451124978365313).epsilon(1e-12));
  CHECK(entropy(ProductMeasure(p)) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("expected_array_value") {
  VectorArray kalai = kalai_array(2);
  Vec mean = expected_array_value(kalai, ProductMeasure::uniform(2, 2));
  CHECK(mean[0] == doctest::Approx(1.0));
  CHECK(mean[1] == doctest::Approx(1.5));

  // Point mass reproduces the word value.
  std::vector<int> word{1, 0};
  Vec at_word = expected_array_value(kalai, ProductMeasure::point_mass(2, 2, word));
  CHECK(at_word[0] == doctest::Approx(1.0));
  CHECK(at_word[1] == doctest::Approx(1.0));

  // Symmetric +-v entries cancel under the uniform measure.
  std::vector<std::vector<IntVec>> entries(3);
  for (int i = 0; i < 3; ++i) entries[i] = {ivec({2}), ivec({-2})};
  VectorArray symmetric(3, {"a", "b"}, 1, entries, dvec({2}));
  Vec zero = expected_array_value(symmetric, ProductMeasure::uniform(3, 2));
  CHECK(zero[0] == doctest::Approx(0.0));
}

TEST_CASE("marginals") {
  Rng rng(7);
  ProductMeasure p1 = random_measure(6, 2, rng);
  ProductMeasure p2 = random_measure(6, 3, rng);
  PairMeasure q = PairMeasure::independent(p1, p2);
  ProductMeasure m1 = marginal(q, 1);
  ProductMeasure m2 = marginal(q, 2);
  CHECK((m1.probabilities() - p1.probabilities()).cwiseAbs().maxCoeff() < 1e-14);
  CHECK((m2.probabilities() - p2.probabilities()).cwiseAbs().maxCoeff() < 1e-14);

  // q with all mass on (0,0) and (1,1): both marginals fair.
  Mat diag = Mat::Zero(4, 4);
  for (int i = 0; i < 4; ++i) {
    diag(i, 0) = 0.5;  // (0,0)
    diag(i, 3) = 0.5;  // (1,1)
  }
  PairMeasure coupled(diag, 2, 2);
  CHECK(marginal(coupled, 1).p(0, 1) == doctest::Approx(0.5));
  CHECK(marginal(coupled, 2).p(0, 1) == doctest::Approx(0.5));

  // Frankl-Rodl coupling q11 = t/n, q01 = q10 = (k-t)/n: marginal p1 = k/n.
  int n = 10, k = 4, t = 2;
  Mat fr(n, 4);
  for (int i = 0; i < n; ++i) {
    fr(i, pair_letter(1, 1)) = static_cast<double>(t) / n;
    fr(i, pair_letter(0, 1)) = static_cast<double>(k - t) / n;
    fr(i, pair_letter(1, 0)) = static_cast<double>(k - t) / n;
    fr(i, pair_letter(0, 0)) = static_cast<double>(n - 2 * k + t) / n;
  }
  PairMeasure frankl(fr, 2, 2);
  CHECK(marginal(frankl, 1).p(3, 1) == doctest::Approx(static_cast<double>(k) / n));
}

TEST_CASE("boundedness and density") {
  ProductMeasure fair = ProductMeasure::uniform(8, 2);
  CHECK(is_kappa_bounded(fair, 0.1));
  CHECK(density(fair, 0.1).dense);

  ProductMeasure point = ProductMeasure::point_mass(4, 2, {1, 1, 1, 1});
  CHECK_FALSE(is_kappa_bounded(point, 1e-9));

  Mat skew(5, 2);
  for (int i = 0; i < 5; ++i) {
    skew(i, 1) = 0.05;
    skew(i, 0) = 0.95;
  }
  ProductMeasure thin(skew);
  CHECK_FALSE(is_kappa_bounded(thin, 0.1));
  CHECK_FALSE(density(thin, 0.1).dense);
  CHECK(is_kappa_bounded(thin, 0.01));
  CHECK(density(thin, 0.01).dense);
  CHECK(density(thin, 0.01).dense_coordinates == 5);
}

TEST_CASE("entropy subadditivity with equality iff independent") {
  Rng rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    Rng local = rng.split(trial);
    int n = 3 + static_cast<int>(local.next_below(4));
    // Random coupled pair measure.
    Mat q(n, 4);
    for (int i = 0; i < n; ++i) {
      double total = 0;
      for (int j = 0; j < 4; ++j) {
        q(i, j) = 0.02 + local.next_double();
        total += q(i, j);
      }
      q.row(i) /= total;
    }
    PairMeasure coupled(q, 2, 2);
    double lhs = entropy(coupled);
    double rhs = entropy(marginal(coupled, 1)) + entropy(marginal(coupled, 2));
    CHECK(lhs <= rhs + 1e-10);

    // Equality at the independent coupling.
    PairMeasure independent =
        PairMeasure::independent(marginal(coupled, 1), marginal(coupled, 2));
    double joint = entropy(independent);
    double sum = entropy(marginal(coupled, 1)) + entropy(marginal(coupled, 2));
    CHECK(joint == doctest::Approx(sum).epsilon(1e-12));
  }
}

TEST_CASE("concavity gap of the entropy term") {
  // L(p+t) + L(p-t) - 2 L(p) <= -t^2 / log 2 whenever |t| < min(p, 1-p).
  Rng rng(123);
  for (int trial = 0; trial < 2000; ++trial) {
    double p = 0.01 + 0.98 * rng.next_double();
    double limit = std::min(p, 1 - p);
    double t = (2 * rng.next_double() - 1) * 0.999 * limit;
    double gap = entropy_term(p + t) + entropy_term(p - t) - 2 * entropy_term(p);
    CHECK(gap <= -t * t / std::log(2.0) + 1e-12);
  }
}

TEST_CASE("independent coupling round-trips through marginal") {
  Rng rng(5);
  ProductMeasure p1 = random_measure(9, 3, rng);
  ProductMeasure p2 = random_measure(9, 2, rng);
  PairMeasure q = PairMeasure::independent(p1, p2);
  PairMeasure back = PairMeasure::independent(marginal(q, 1), marginal(q, 2));
  CHECK((back.probabilities() - q.probabilities()).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("measure validation rejects bad rows") {
  Mat bad(2, 2);
  bad << 0.5, 0.6, 0.5, 0.5;
  CHECK_THROWS_AS(ProductMeasure{bad}, std::invalid_argument);
  Mat negative(1, 2);
  negative << -0.2, 1.2;
  CHECK_THROWS_AS(ProductMeasure{negative}, std::invalid_argument);
}
