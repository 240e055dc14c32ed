#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vecint/exactcount.hpp"
#include "vecint/maxent.hpp"
#include "vecint/probkit.hpp"

#include <cmath>

using namespace vecint;

namespace {

IntVec ivec(std::initializer_list<long long> values) {
  IntVec v(static_cast<int>(values.size()));
  int i = 0;
  for (long long value : values) v[i++] = value;
  return v;
}

}  // namespace

TEST_CASE("sample: point mass, reproducibility, frequencies") {
  ProductMeasure point = ProductMeasure::point_mass(6, 3, {2, 0, 1, 1, 0, 2});
  Rng rng(1);
  for (int trial = 0; trial < 20; ++trial)
    CHECK(sample(point, rng) == std::vector<int>{2, 0, 1, 1, 0, 2});

  // Same seed, same stream.
  Rng a(42), b(42);
  ProductMeasure fair = ProductMeasure::uniform(10, 2);
  for (int trial = 0; trial < 50; ++trial) CHECK(sample(fair, a) == sample(fair, b));

  // Fair-coin frequencies within 3 sigma over 1e5 draws.
  const long long trials = 100000;
  Rng rng2(7);
  long long ones = 0;
  for (long long trial = 0; trial < trials; ++trial) {
    Rng row = rng2.split(static_cast<std::uint64_t>(trial));
    for (int letter : sample(fair, row)) ones += letter;
  }
  double mean = static_cast<double>(ones) / (trials * 10);
  CHECK(std::abs(mean - 0.5) < 3 * 0.5 / std::sqrt(static_cast<double>(trials) * 10));
}

TEST_CASE("vector chernoff bound respected on the Kalai array") {
  VectorArray kalai = kalai_array(20);
  double root = std::sqrt(20.0);
  TailReport report = vector_chernoff_check(kalai, ProductMeasure::uniform(20, 2),
                                            {0.0, root, 2 * root, 4 * root}, 20000, 3);
  CHECK(report.bounds_respected);
  // The bound column is exactly 2 D exp(-t^2 / 8n).
  for (std::size_t k = 0; k < report.thresholds.size(); ++k) {
    double t = report.thresholds[k];
    CHECK(report.theoretical[k] == 2.0 * 2 * std::exp(-t * t / (8.0 * 20)));
  }
  // t = 0: the bound is 2D >= 1, trivially satisfied.
  CHECK(report.theoretical[0] >= 1.0);
  CHECK(report.empirical[0] <= 1.0);

  // Deterministic measure: all mass at deviation 0.
  TailReport point = vector_chernoff_check(
      kalai, ProductMeasure::point_mass(20, 2, std::vector<int>(20, 1)),
      {0.5, 1.0}, 2000, 3);
  CHECK(point.empirical[0] == 0.0);
  CHECK(point.bounds_respected);

  CHECK_THROWS(vector_chernoff_check(kalai, ProductMeasure::uniform(20, 2), {1.0}, 10, 3));
}

TEST_CASE("lipschitz concentration: Hamming distance to a word") {
  const int n = 24;
  std::vector<int> centre(n, 0);
  auto hamming = [&](const std::vector<int>& word) {
    double distance = 0;
    for (int i = 0; i < n; ++i) distance += word[i] != centre[i];
    return distance;
  };
  TailReport report = lipschitz_concentration_check(
      hamming, 1.0, ProductMeasure::uniform(n, 2), {2.0, 4.0, 8.0, 12.0}, 20000, 9);
  CHECK(report.bounds_respected);

  // Constant f: all mass at deviation 0.
  auto constant = [](const std::vector<int>&) { return 3.0; };
  TailReport flat = lipschitz_concentration_check(constant, 1.0,
                                                  ProductMeasure::uniform(n, 2), {0.5}, 2000, 9);
  CHECK(flat.empirical[0] == 0.0);

  // A violated Lipschitz claim is caught by the spot check.
  auto jumpy = [&](const std::vector<int>& word) { return 10.0 * word[0]; };
  CHECK_THROWS(lipschitz_concentration_check(jumpy, 1.0, ProductMeasure::uniform(n, 2),
                                             {1.0}, 2000, 9));
}

TEST_CASE("dependent random choice on the complete bipartite graph") {
  Rng rng(0);
  BipartiteGraph complete = BipartiteGraph::empty(30, 25);
  for (int u = 0; u < 30; ++u)
    for (int v = 0; v < 25; ++v) complete.add_edge(u, v);
  DrcResult result = dependent_random_choice(complete, 3, 0);
  CHECK(result.success);
  CHECK(result.vertices.size() == 30);  // U = V1, guarantee trivial

  // Empty graph: alpha = 0, requirement 0, vacuous success.
  BipartiteGraph empty = BipartiteGraph::empty(10, 10);
  DrcResult nothing = dependent_random_choice(empty, 2, 0);
  CHECK(nothing.success);
  CHECK(nothing.required_size == 0.0);
}

TEST_CASE("dependent random choice on G(200,200,1/2)") {
  Rng rng(12345);
  BipartiteGraph graph = BipartiteGraph::random(200, 200, 0.5, rng);
  DrcResult result = dependent_random_choice(graph, 4, 12345);
  REQUIRE(result.success);
  CHECK(static_cast<double>(result.vertices.size()) >= result.required_size);
  // Pairwise common neighbourhoods meet alpha * N1^{-1/4} * N2 ~ 0.5*200^{3/4}.
  double alpha = static_cast<double>(graph.edges) / (200.0 * 200.0);
  CHECK(result.threshold ==
        doctest::Approx(alpha * std::pow(200.0, 0.75)).epsilon(1e-12));
  for (std::size_t a = 0; a < result.vertices.size(); ++a)
    for (std::size_t b = a + 1; b < result.vertices.size(); ++b)
      CHECK(graph.common_neighbours(result.vertices[a], result.vertices[b]) >=
            result.threshold);
}

TEST_CASE("independence number basics") {
  CHECK(independence_number(SmallGraph::empty(7)).size == 7);
  CHECK(independence_number(SmallGraph::complete(9)).size == 1);
  CHECK(independence_number(SmallGraph::cycle(5)).size == 2);
  // AND-product of two 5-cycles: an edge needs edges in both coordinates,
  // so A x V(C5) is independent whenever A is; alpha = alpha(C5) * 5 = 10.
  SmallGraph product = product_graph(SmallGraph::cycle(5), SmallGraph::cycle(5));
  IndependenceResult result = independence_number(product);
  CHECK(result.exact);
  CHECK(result.size == 10);
  // The witness is independent, and the lifted construction confirms the
  // lower bound.
  for (std::size_t a = 0; a < result.witness.size(); ++a)
    for (std::size_t b = a + 1; b < result.witness.size(); ++b)
      CHECK_FALSE(product.has_edge(result.witness[a], result.witness[b]));
  for (int u : {0, 2})
    for (int up : {0, 2})
      for (int j = 0; j < 5; ++j)
        for (int jp = 0; jp < 5; ++jp)
          if (u != up || j != jp) CHECK_FALSE(product.has_edge(u * 5 + j, up * 5 + jp));
}

TEST_CASE("independence number budget produces a lower bound flag") {
  Rng rng(2);
  SmallGraph graph = SmallGraph::empty(40);
  for (int u = 0; u < 40; ++u)
    for (int v = u + 1; v < 40; ++v)
      if (rng.next_double() < 0.2) graph.add_edge(u, v);
  IndependenceResult tight = independence_number(graph, 50);
  CHECK_FALSE(tight.exact);
  IndependenceResult full = independence_number(graph);
  CHECK(full.exact);
  CHECK(tight.size <= full.size);
}

TEST_CASE("contiguity: identical measures give empty B for all eps > 0") {
  auto words = enumerate_fibre(kalai_array(8), ivec({4, 18}));
  double uniform = 1.0 / static_cast<double>(words.size());
  ContiguityTable table = contiguity_exponent(
      words, [&](const std::vector<int>&) { return uniform; },
      [&](const std::vector<int>&) { return uniform; }, 8, {0.01, 0.1, 0.3});
  for (double mass : table.mu_mass) CHECK(mass == 0.0);
}

TEST_CASE("contiguity: disjoint supports give mu(B) = mu(Delta)") {
  auto words = enumerate_fibre(kalai_array(8), ivec({4, 18}));
  double uniform = 1.0 / static_cast<double>(words.size());
  ContiguityTable table = contiguity_exponent(
      words, [&](const std::vector<int>&) { return uniform; },
      [&](const std::vector<int>&) { return 0.0; }, 8, {0.05, 0.2});
  for (double mass : table.mu_mass) CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("contiguity: maxent vs uniform fibre measure on Kalai n = 12") {
  IntVec z = ivec({6, 39});
  auto words = enumerate_fibre(kalai_array(12), z);
  MaxEntSolution solution = solve_maxent(kalai_array(12), z);
  REQUIRE(solution.status == SolveStatus::converged);
  double uniform = 1.0 / static_cast<double>(words.size());
  std::vector<double> eps{0.005, 0.01, 0.02, 0.05, 0.1, 0.2};
  ContiguityTable table = contiguity_exponent(
      words, [&](const std::vector<int>& w) { return solution.measure.mass(w); },
      [&](const std::vector<int>&) { return uniform; }, 12, eps);
  // Monotone decreasing in eps.
  for (std::size_t k = 1; k < table.mu_mass.size(); ++k)
    CHECK(table.mu_mass[k] <= table.mu_mass[k - 1] + 1e-15);

  // Boltzmann measures are constant on their fibre, so
  // nu(x) >= mu(x) 2^{log2 |X| - H} holds identically (counts <= 2^H and
  // mass <= 1 combine into exactly this inequality).
  double log2_count = std::log2(static_cast<double>(words.size()));
  for (const auto& word : words) {
    double lhs = uniform;
    double rhs = solution.measure.mass(word) *
                 std::pow(2.0, log2_count - solution.entropy_bits);
    CHECK(lhs >= rhs * (1 - 1e-9));
  }

  // mu-mass of { x : -log2 mu(x) > H + eps n } over the whole cube is
  // computed exactly at n = 12 and decreases with eps.
  std::vector<std::vector<int>> cube;
  for (int mask = 0; mask < (1 << 12); ++mask) {
    std::vector<int> word(12);
    for (int i = 0; i < 12; ++i) word[i] = (mask >> i) & 1;
    cube.push_back(word);
  }
  double previous = 1.0;
  for (double eps : {0.0, 0.05, 0.1, 0.2}) {
    double mass = 0;
    for (const auto& word : cube) {
      double log_mass = solution.measure.log_mass(word);
      if (-log_mass > solution.entropy_bits + eps * 12) mass += solution.measure.mass(word);
    }
    CHECK(mass <= previous + 1e-15);
    previous = mass;
  }
}

TEST_CASE("correlation_check: full cube and independent equality") {
  PairMeasure fair(Mat::Constant(10, 4, 0.25), 2, 2);
  Subcube full;
  full.n = 10;
  full.allowed.assign(10, {});
  CorrelationResult result = correlation_check(fair, full, full);
  CHECK(result.lhs == doctest::Approx(1.0));
  CHECK(result.rhs == doctest::Approx(1.0));
  CHECK(result.holds);

  // Independent coupling: the joint mass factorises exactly, so
  // mu_q(A1 x A2) = mu_p(A1) mu_p(A2), i.e. lhs = rhs^2.
  Rng rng(3);
  Mat p(8, 2);
  for (int i = 0; i < 8; ++i) {
    p(i, 1) = 0.2 + 0.6 * rng.next_double();
    p(i, 0) = 1 - p(i, 1);
  }
  ProductMeasure base(p);
  PairMeasure independent = PairMeasure::independent(base, base);
  Subcube cube = Subcube::random(8, 2, rng);
  CorrelationResult equal = correlation_check(independent, cube, cube);
  CHECK(equal.lhs == doctest::Approx(equal.rhs * equal.rhs).epsilon(1e-12));
  CHECK(equal.holds);
}

TEST_CASE("correlation_check: subcube factorisation matches explicit enumeration") {
  Rng rng(14);
  const int n = 8;
  Mat q(n, 4);
  for (int i = 0; i < n; ++i) {
    double total = 0;
    for (int j = 0; j < 4; ++j) {
      q(i, j) = 0.05 + rng.next_double();
      total += q(i, j);
    }
    q.row(i) /= total;
  }
  PairMeasure measure(q, 2, 2);
  Subcube a1 = Subcube::random(n, 2, rng);
  Subcube a2 = Subcube::random(n, 2, rng);
  // Explicit word lists.
  std::vector<std::vector<int>> list1, list2;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> word(n);
    for (int i = 0; i < n; ++i) word[i] = (mask >> i) & 1;
    if (a1.contains(word)) list1.push_back(word);
    if (a2.contains(word)) list2.push_back(word);
  }
  CorrelationResult fast = correlation_check(measure, a1, a2);
  CorrelationResult slow = correlation_check(measure, list1, list2);
  CHECK(fast.lhs == doctest::Approx(slow.lhs).epsilon(1e-10));
  CHECK(fast.rhs == doctest::Approx(slow.rhs).epsilon(1e-10));
}

TEST_CASE("correlation_check: no Cauchy-Schwarz violations on random instances") {
  Rng root(2718);
  const int n = 10;
  for (int instance = 0; instance < 300; ++instance) {
    Rng rng = root.split(instance);
    Mat q(n, 4);
    for (int i = 0; i < n; ++i) {
      double total = 0;
      for (int j = 0; j < 4; ++j) {
        q(i, j) = 0.05 + rng.next_double();
        total += q(i, j);
      }
      q.row(i) /= total;
    }
    PairMeasure measure(q, 2, 2);
    CorrelationResult result =
        correlation_check(measure, Subcube::random(n, 2, rng), Subcube::random(n, 2, rng));
    CHECK(result.holds);
  }
}
