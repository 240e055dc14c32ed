// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion. Exits nonzero when any
// criterion fails.
#include "vecint/counterexamples.hpp"
#include "vecint/exactcount.hpp"
#include "vecint/kalai.hpp"
#include "vecint/maxent.hpp"
#include "vecint/probkit.hpp"
#include "vecint/structures.hpp"

#include "grid_oracle.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace vecint;

namespace {

int failures = 0;

void report(int criterion, const std::string& name, bool pass, double seconds,
            const std::string& detail) {
  std::printf("%s  criterion %2d  %-28s (%6.2fs)  %s\n", pass ? "PASS" : "FAIL", criterion,
              name.c_str(), seconds, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

void run(int criterion, const std::string& name,
         const std::function<bool(std::string&)>& body) {
  auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool pass = false;
  try {
    pass = body(detail);
  } catch (const std::exception& error) {
    detail = std::string("exception: ") + error.what();
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report(criterion, name, pass, seconds, detail);
}

IntVec ivec2(long long a, long long b) {
  IntVec v(2);
  v << a, b;
  return v;
}

// 1. Counting vs entropy: 0 <= H(mu^V_w) - log2 |[n]_{k,s}| <= 3 log2 n + 10
//    for n in {20, 40, 60, 80} at alpha = (1/2, 1/2), with the deviation per
//    coordinate strictly decreasing, each n within 60 s.
bool criterion1(std::string& detail) {
  std::ostringstream out;
  bool pass = true;
  double previous_rate = std::numeric_limits<double>::infinity();
  for (int n : {20, 40, 60, 80}) {
    auto start = std::chrono::steady_clock::now();
    long long k = n / 2;
    long long s = (static_cast<long long>(n) * (n - 1) / 2) / 2;
    LdpDeviation deviation = ldp_deviation(kalai_array(n), ivec2(k, s));
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    double budget = 3 * std::log2(static_cast<double>(n)) + 10;
    bool in_range = deviation.deviation_bits >= 0 && deviation.deviation_bits <= budget;
    bool decreasing = deviation.deviation_bits / n < previous_rate;
    bool on_time = seconds <= 60.0;
    pass = pass && in_range && decreasing && on_time;
    previous_rate = deviation.deviation_bits / n;
    out << "n=" << n << ":" << deviation.deviation_bits << "b/" << budget << "b "
        << (in_range ? "" : "RANGE! ") << (decreasing ? "" : "MONOTONE! ")
        << (on_time ? "" : "TIME! ");
  }
  detail = out.str();
  return pass;
}

// 2. Popular intersection matches beta*: n = 14, z = (7, floor((7/16)*91));
//    |t* - 14 b1*| <= 2 and |w* - 91 b2*| <= 14, within 120 s.
bool criterion2(std::string& detail) {
  const int n = 14;
  long long s = static_cast<long long>(std::floor((7.0 / 16) * 91));
  auto [target, count] = popular_intersection(kalai_array(n), ivec2(7, s));
  Eigen::Vector2d bs = beta_star(0.5, 7.0 / 16);
  double t_gap = std::abs(static_cast<double>(target[0]) - n * bs[0]);
  double w_gap = std::abs(static_cast<double>(target[1]) - 91 * bs[1]);
  std::ostringstream out;
  out << "argmax=(" << target[0] << "," << target[1] << ") predicted=(" << n * bs[0] << ","
      << 91 * bs[1] << ") gaps=(" << t_gap << "," << w_gap << ")";
  detail = out.str();
  return t_gap <= 2.0 && w_gap <= 14.0;
}

// 3. Gamma analytics: (a) h-inverse round trip <= 1e-8 on a 100-point grid
//    in [-4,4]^2; (b) Gamma1 marginal identity sup residual <= 1e-10 on 100
//    random lambda; (c) beta*(a,a) = (a^2, a^2) to 1e-10.
bool criterion3(std::string& detail) {
  double worst_roundtrip = 0;
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) {
      Eigen::Vector2d lambda(-4 + 8.0 * i / 9, -4 + 8.0 * j / 9);
      Eigen::Vector2d alpha = h_map(lambda);
      HInverseResult inverse = h_inverse(alpha[0], alpha[1]);
      if (inverse.boundary) return false;
      worst_roundtrip =
          std::max(worst_roundtrip, (inverse.lambda - lambda).lpNorm<Eigen::Infinity>());
    }

  Rng rng(100);
  double worst_identity = 0;
  for (int trial = 0; trial < 100; ++trial) {
    Eigen::Vector2d lambda(8 * rng.next_double() - 4, 8 * rng.next_double() - 4);
    Eigen::Vector4d pi;
    pi << lambda[0], 2 * lambda[0], lambda[1], 2 * lambda[1];
    for (int grid = 0; grid <= 2000; ++grid) {
      double x = grid / 2000.0;
      auto cells = g_pi(pi, x);
      worst_identity =
          std::max(worst_identity, std::abs(f_lambda(lambda, x) - cells[1] - cells[3]));
    }
  }

  double worst_diag = 0;
  for (double a : {0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8}) {
    Eigen::Vector2d bs = beta_star(a, a);
    worst_diag = std::max({worst_diag, std::abs(bs[0] - a * a), std::abs(bs[1] - a * a)});
  }

  std::ostringstream out;
  out << "roundtrip=" << worst_roundtrip << " identity=" << worst_identity
      << " diagonal=" << worst_diag;
  detail = out.str();
  return worst_roundtrip <= 1e-8 && worst_identity <= 1e-10 && worst_diag <= 1e-10;
}

// 4. H_max: grid-oracle agreement within 1e-4 bits on 20 random instances
//    at n <= 6; exact 2 H(p) on independent-coupling targets; empty Q gives
//    H_max = 0.
bool criterion4(std::string& detail) {
  Rng root(31);
  double worst_gap = 0;
  int tested = 0;
  for (int trial = 0; tested < 20 && trial < 400; ++trial) {
    Rng rng = root.split(trial);
    const int n = 4 + static_cast<int>(rng.next_below(3));
    std::vector<double> p(n);
    std::vector<long long> v(n);
    std::vector<IntVec> vectors(n);
    for (int i = 0; i < n; ++i) {
      p[i] = 0.25 + 0.5 * rng.next_double();
      v[i] = 1 + static_cast<long long>(rng.next_below(3));
      IntVec one(1);
      one << v[i];
      vectors[i] = one;
    }
    VectorArray array = binary_array(vectors, Vec::Constant(1, 3.0));
    Mat pm(n, 2);
    for (int i = 0; i < n; ++i) {
      pm(i, 1) = p[i];
      pm(i, 0) = 1 - p[i];
    }
    const double step = 1e-3;
    double raw = 0;
    for (int i = 0; i < n; ++i)
      raw += (0.35 * std::max(0.0, 2 * p[i] - 1) + 0.65 * p[i]) * v[i];
    double target = std::round(raw / step) * step;
    Vec w(1);
    w << target;
    HmaxSolution solution = solve_hmax(ProductMeasure(pm), array, w, 0.0);
    if (solution.status != HmaxStatus::converged) continue;
    double oracle = vecint_test::hmax_grid_oracle_1d(p, v, target, step);
    if (oracle < -1e17) return false;
    worst_gap = std::max(worst_gap, std::abs(solution.hmax_bits - oracle));
    ++tested;
  }
  if (tested < 20) {
    detail = "could not assemble 20 converged instances";
    return false;
  }

  // Independent-coupling target: H_max = 2 H(p) exactly.
  double worst_independent = 0;
  for (int trial = 0; trial < 5; ++trial) {
    Rng rng = root.split(1000 + trial);
    const int n = 7;
    std::vector<IntVec> vectors(n);
    Mat pm(n, 2);
    Vec w = Vec::Zero(2);
    for (int i = 0; i < n; ++i) {
      IntVec v(2);
      v << 1 + static_cast<long long>(rng.next_below(2)),
          static_cast<long long>(rng.next_below(5)) - 2;
      vectors[i] = v;
      pm(i, 1) = 0.2 + 0.6 * rng.next_double();
      pm(i, 0) = 1 - pm(i, 1);
      w += pm(i, 1) * pm(i, 1) * v.cast<double>();
    }
    VectorArray array = binary_array(vectors, Vec::Constant(2, 2.0));
    ProductMeasure marginal_p(pm);
    HmaxSolution solution = solve_hmax(marginal_p, array, w, 0.0);
    if (solution.status != HmaxStatus::converged) return false;
    worst_independent =
        std::max(worst_independent, std::abs(solution.hmax_bits - 2 * entropy(marginal_p)));
  }

  // Empty Q reported with H_max = 0.
  std::vector<IntVec> ones(5, IntVec::Ones(1));
  VectorArray unit = binary_array(ones, Vec::Ones(1));
  HmaxSolution empty = solve_hmax(ProductMeasure::uniform(5, 2), unit, Vec::Constant(1, 4.9), 0.0);
  bool empty_ok = empty.status == HmaxStatus::empty && empty.hmax_bits == 0.0;

  std::ostringstream out;
  out << "oracle_gap=" << worst_gap << " independent_gap=" << worst_independent
      << " emptyQ=" << (empty_ok ? "ok" : "BAD");
  detail = out.str();
  return worst_gap <= 1e-4 && worst_independent <= 1e-6 && empty_ok;
}

// 5. Counterexample 1 at n = 16, zeta = 0.01: A = fibre \ E has exactly zero
//    (t,w)-intersections and the ell-bound holds for every intersecting
//    pair, within 300 s.
bool criterion5(std::string& detail) {
  Ce1Report report = build_and_verify_ce1(16, 0.01);
  std::ostringstream out;
  out << "fibre=" << to_string(report.fibre_size) << " |A|=" << to_string(report.family_size)
      << " pairs(A)=" << to_string(report.family_pairs)
      << " ell_violations=" << report.ell_bound_violations
      << (report.pair_fibre_empty ? " (pair fibre empty at this scale)" : "");
  detail = out.str();
  return report.verified && report.family_pairs == 0 && report.ell_bound_violations == 0;
}

// 6. Counterexample 2 at n = 15, zeta = 1/15: exact emptiness of
//    A_U x_{(t,w)} A_U and the pigeonhole bound 2k - (n - |U|) >= t + 1.
bool criterion6(std::string& detail) {
  Ce2Report report = build_and_verify_ce2(15, 1.0 / 15);
  std::ostringstream out;
  out << "|A_U|=" << to_string(report.family_size)
      << " pairs(A_U)=" << to_string(report.family_pairs)
      << " bound=" << report.pigeonhole_bound << ">=t+1=" << (report.t + 1);
  detail = out.str();
  return report.verified && report.family_pairs == 0 && report.pigeonhole_holds;
}

// 7. Cauchy-Schwarz contiguity: zero violations of
//    mu_q(A1 x A2)^2 <= mu_p1(A1) mu_p2(A2) over 1000 random kappa-bounded
//    instances at n = 10, evaluated exactly.
bool criterion7(std::string& detail) {
  Rng root(2718);
  const int n = 10;
  long long violations = 0;
  for (int instance = 0; instance < 1000; ++instance) {
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
    if (!result.holds) ++violations;
  }
  std::ostringstream out;
  out << "instances=1000 violations=" << violations;
  detail = out.str();
  return violations == 0;
}

// 8. Concentration bounds: empirical tails below the stated bounds at every
//    grid point with 1e5 trials and a fixed seed, for both the vector
//    Chernoff bound and the Lipschitz bound.
bool criterion8(std::string& detail) {
  const int n = 24;
  VectorArray kalai = kalai_array(n);
  double root = std::sqrt(static_cast<double>(n));
  TailReport chernoff = vector_chernoff_check(
      kalai, ProductMeasure::uniform(n, 2), {0.0, root, 2 * root, 4 * root, 6 * root},
      100000, 8);

  std::vector<int> centre(n, 0);
  auto hamming = [&](const std::vector<int>& word) {
    double distance = 0;
    for (int i = 0; i < n; ++i) distance += word[i] != centre[i];
    return distance;
  };
  TailReport lipschitz = lipschitz_concentration_check(
      hamming, 1.0, ProductMeasure::uniform(n, 2), {2.0, 4.0, 8.0, 12.0, 16.0}, 100000, 8);

  std::ostringstream out;
  out << "chernoff=" << (chernoff.bounds_respected ? "ok" : "VIOLATED")
      << " lipschitz=" << (lipschitz.bounds_respected ? "ok" : "VIOLATED") << " trials=1e5";
  detail = out.str();
  return chernoff.bounds_respected && lipschitz.bounds_respected;
}

// 9. VC obstruction: the pair family has VC dimension exactly 0; uvc <= vc
//    on 200 random families at n <= 10.
bool criterion9(std::string& detail) {
  VcObstructionReport obstruction = vc_obstruction_family(9);
  bool zero = obstruction.vc == 0 && obstruction.letter00_absent;

  Rng root(55);
  bool ordered = true;
  for (int trial = 0; trial < 200; ++trial) {
    Rng rng = root.split(trial);
    int n = 4 + static_cast<int>(rng.next_below(7));  // 4..10
    int size = 1 + static_cast<int>(rng.next_below(60));
    std::vector<std::vector<int>> family;
    for (int s = 0; s < size; ++s) {
      std::vector<int> word(n);
      for (auto& letter : word) letter = static_cast<int>(rng.next_below(2));
      family.push_back(std::move(word));
    }
    if (uvc_dim(family, n, 2) > vc_dim(family, n, 2)) ordered = false;
  }
  std::ostringstream out;
  out << "vc(obstruction)=" << obstruction.vc << " families=200 uvc<=vc="
      << (ordered ? "ok" : "VIOLATED");
  detail = out.str();
  return zero && ordered;
}

// 10. Entropy stability: 50 constructed feasible perturbations with
//     ||p - p~||_1 = d n satisfy H(p~) <= H(p) - d^2 n + 1e-9.
bool criterion10(std::string& detail) {
  const int n = 20;
  MaxEntSolution solution = solve_maxent(kalai_array(n), ivec2(10, 100));
  if (solution.status != SolveStatus::converged) {
    detail = "maxent did not converge";
    return false;
  }
  const double base_entropy = solution.entropy_bits;
  Rng rng(17);
  int tested = 0;
  double worst_slack = std::numeric_limits<double>::infinity();
  while (tested < 50) {
    int i = static_cast<int>(rng.next_below(n - 3));
    int j = i + 1 + static_cast<int>(rng.next_below(n - i - 2));
    int k = i + 1 + static_cast<int>(rng.next_below(n - i - 2));
    int l = j + k - i;  // (1,i+1) - (1,j+1) - (1,k+1) + (1,l+1) = 0
    if (l >= n || j == k || l == j || l == k || l == i) continue;
    double scale = 0.45 * rng.next_double();
    Mat p = solution.measure.probabilities();
    bool valid = true;
    double signs[4] = {1, -1, -1, 1};
    int idx[4] = {i, j, k, l};
    for (int c = 0; c < 4; ++c) {
      double moved = p(idx[c], 1) + scale * signs[c];
      if (moved <= 1e-6 || moved >= 1 - 1e-6) valid = false;
    }
    if (!valid) continue;
    double l1 = 0;
    for (int c = 0; c < 4; ++c) {
      p(idx[c], 1) += scale * signs[c];
      p(idx[c], 0) -= scale * signs[c];
      l1 += std::abs(scale);
    }
    double d = l1 / n;
    double slack = (base_entropy - d * d * n) - entropy(ProductMeasure(p));
    worst_slack = std::min(worst_slack, slack);
    if (slack < -1e-9) {
      detail = "stability violated";
      return false;
    }
    ++tested;
  }
  std::ostringstream out;
  out << "perturbations=50 min_slack=" << worst_slack << "b";
  detail = out.str();
  return true;
}

}  // namespace

int main() {
  run(1, "counting vs entropy", criterion1);
  run(2, "popular intersection", criterion2);
  run(3, "gamma analytics", criterion3);
  run(4, "hmax program", criterion4);
  run(5, "counterexample 1", criterion5);
  run(6, "counterexample 2", criterion6);
  run(7, "cauchy-schwarz contiguity", criterion7);
  run(8, "concentration bounds", criterion8);
  run(9, "vc obstruction", criterion9);
  run(10, "entropy stability", criterion10);
  if (failures == 0) {
    std::printf("ACCEPTANCE: all criteria passed\n");
    return 0;
  }
  std::printf("ACCEPTANCE: %d criterion(s) failed\n", failures);
  return 1;
}
