#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vecint/counterexamples.hpp"
#include "vecint/exactcount.hpp"

#include <bit>

using namespace vecint;

TEST_CASE("counterexample 1 arithmetic and exact verification at n = 16") {
  Ce1Report report = build_and_verify_ce1(16, 0.01);
  CHECK(report.k == 8);
  CHECK(report.s == 52);   // floor((7/16) * 120)
  CHECK(report.t == 4);
  CHECK(report.w == 8);    // floor(0.0725 * 120)
  CHECK(report.kappa == doctest::Approx(0.4));
  CHECK(report.fibre_size > 0);
  CHECK(report.verified);
  CHECK(report.family_pairs == 0);
  CHECK(report.ell_bound_violations == 0);
  // At this scale the (t,w) pair set is empty outright (a 4-set of distinct
  // positive integers sums to at least 10 > 8); reported, not failed.
  CHECK(report.pair_fibre_empty);
  CHECK(report.density > 0.5);
}

TEST_CASE("counterexample 1 with a nonempty pair fibre") {
  // zeta = 0.03 gives w = 11; C = {1,2,3,5} realises (t, w) = (4, 11), and
  // every intersecting pair must place 3 elements inside [4].
  Ce1Report report = build_and_verify_ce1(16, 0.03);
  CHECK(report.w == 11);
  CHECK_FALSE(report.pair_fibre_empty);
  CHECK(report.fibre_pairs > 0);
  CHECK(report.verified);
  CHECK(report.family_pairs == 0);
  CHECK(report.ell_bound_violations == 0);
  // E is a genuine restriction (the fibre at s = 52 < 68 leans on small
  // elements, so most sets have 3 of [4] and land in E).
  CHECK(report.restricted_size > 0);
  CHECK(report.family_size > 0);
  CHECK(report.density > 0.05);
}

TEST_CASE("counterexample 1 rejects degenerate zeta") {
  CHECK_THROWS_AS(build_and_verify_ce1(16, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(build_and_verify_ce1(16, 1.0 / 16), std::invalid_argument);
}

TEST_CASE("counterexample 2 at n = 15, zeta = 1/15") {
  Ce2Report report = build_and_verify_ce2(15, 1.0 / 15);
  CHECK(report.k == 10);
  CHECK(report.s == 70);
  CHECK(report.t == 6);
  CHECK(report.w == 42);
  CHECK(report.u_size == 3);
  CHECK(report.pigeonhole_bound == 8);
  CHECK(report.pigeonhole_holds);  // 8 >= t + 1 = 7
  CHECK(report.verified);
  CHECK(report.family_pairs == 0);
  CHECK(report.family_size > 0);
  // The pigeonhole bound re-derives from (n, k, |U|) alone.
  CHECK(report.pigeonhole_bound == 2 * report.k - (15 - report.u_size));
  // Realised minimum intersection respects the bound; the witness pair
  // attains the recorded minimum.
  CHECK(report.min_intersection >= report.pigeonhole_bound);
  if (!report.equality_witness_a.empty()) {
    std::uint64_t a = 0, b = 0;
    for (int value : report.equality_witness_a) a |= 1ULL << (value - 1);
    for (int value : report.equality_witness_b) b |= 1ULL << (value - 1);
    CHECK(std::popcount(a & b) == report.min_intersection);
  }
  // At n = 15 even the full fibre has no (6,42)-pairs: such a pair forces
  // |A u B| = 14 and sum(A u B) = 2s - w = 98, but 120 - x = 98 has no
  // solution with x in [15]. Exact and reported, not a failure.
  CHECK(report.fibre_pairs == 0);
}

TEST_CASE("counterexample 2 control: intersections exist at an achievable w") {
  // The excluded-U mechanism is non-vacuous: at t = 6 the feasible sums w
  // satisfy 2s - w = 120 - x for some x in [15]; w = 30 works. The full
  // fibre then has (6,30)-pairs, while A_U still has none for any w, since
  // all its intersections have size >= 8 > 6.
  Ce2Report report = build_and_verify_ce2(15, 1.0 / 15);
  IntVec z(2);
  z << report.k, report.s;
  auto words = enumerate_fibre(kalai_array(15), z);
  std::uint64_t u_mask = 0;
  for (int value : report.u_set) u_mask |= 1ULL << (value - 1);
  std::vector<std::uint64_t> fibre, family;
  for (const auto& word : words) {
    std::uint64_t mask = 0;
    for (int i = 0; i < 15; ++i)
      if (word[i]) mask |= 1ULL << i;
    fibre.push_back(mask);
    if ((mask & u_mask) == 0) family.push_back(mask);
  }
  auto mask_sum = [](std::uint64_t mask) {
    long long total = 0;
    while (mask) {
      total += std::countr_zero(mask) + 1;
      mask &= mask - 1;
    }
    return total;
  };
  long long fibre_pairs = 0, family_pairs = 0;
  for (std::size_t a = 0; a < fibre.size(); ++a)
    for (std::size_t b = 0; b < fibre.size(); ++b) {
      if (a == b) continue;
      std::uint64_t common = fibre[a] & fibre[b];
      if (std::popcount(common) == 6 && mask_sum(common) == 30) ++fibre_pairs;
    }
  for (std::size_t a = 0; a < family.size(); ++a)
    for (std::size_t b = 0; b < family.size(); ++b) {
      if (a == b) continue;
      std::uint64_t common = family[a] & family[b];
      if (std::popcount(common) == 6) ++family_pairs;  // any w at all
    }
  CHECK(fibre_pairs > 0);
  CHECK(family_pairs == 0);
}

TEST_CASE("vc obstruction family has VC dimension exactly zero") {
  VcObstructionReport report = vc_obstruction_family(9);
  CHECK(report.k == 6);
  CHECK(report.t == 3);
  CHECK(report.family_size > 0);
  // |A| = |B| = 2n/3 and |A cap B| = n/3 force A u B = [n]: the letter
  // (0,0) never appears, so not even a singleton is shattered.
  CHECK(report.letter00_absent);
  CHECK(report.vc == 0);
  CHECK(report.uvc == 0);
}

TEST_CASE("vc obstruction control family has positive VC dimension") {
  VcObstructionReport control = vc_obstruction_family(9, 4, 2);
  CHECK_FALSE(control.letter00_absent);
  CHECK(control.vc >= 1);
  CHECK(control.uvc <= control.vc);
}

TEST_CASE("vc obstruction empty family convention") {
  // k = t makes A = B the only option, excluded by nothing here; instead use
  // an unsatisfiable t to get an empty family: vc = 0 by convention.
  VcObstructionReport empty = vc_obstruction_family(6, 2, 5);
  CHECK(empty.family_size == 0);
  CHECK(empty.vc == 0);
}
