#include "vecint/counterexamples.hpp"

#include "vecint/rng.hpp"
#include "vecint/structures.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace vecint {

namespace {

long long choose2(long long n) { return n * (n - 1) / 2; }

// Fibre of [n]_{k,s} as bitmasks (bit i-1 = element i).
std::vector<std::uint64_t> fibre_masks(int n, long long k, long long s) {
  IntVec target(2);
  target << k, s;
  auto words = enumerate_fibre(kalai_array(n), target);
  std::vector<std::uint64_t> masks;
  masks.reserve(words.size());
  for (const auto& word : words) {
    std::uint64_t mask = 0;
    for (int i = 0; i < n; ++i)
      if (word[i] == 1) mask |= (1ULL << i);
    masks.push_back(mask);
  }
  return masks;
}

long long mask_sum(std::uint64_t mask) {
  long long total = 0;
  while (mask) {
    total += std::countr_zero(mask) + 1;
    mask &= mask - 1;
  }
  return total;
}

}  // namespace

Ce1Report build_and_verify_ce1(int n, double zeta) {
  if (!(zeta > 0 && zeta < 1.0 / 16)) throw std::invalid_argument("ce1: zeta in (0, 1/16)");
  if (n > 20) throw std::invalid_argument("ce1: fibre too large (n <= 20)");
  Ce1Report report;
  report.n = n;
  report.zeta = zeta;
  report.k = n / 2;
  report.s = static_cast<long long>(std::floor((7.0 / 16) * choose2(n)));
  report.t = n / 4;
  report.w = static_cast<long long>(std::floor((1.0 / 16 + zeta) * choose2(n)));
  report.kappa = 4 * std::sqrt(zeta);

  const int quarter = n / 4;
  const std::uint64_t quarter_mask = (1ULL << quarter) - 1;
  const double ell_floor = n / 4.0 - std::sqrt(zeta) * n;
  const double restricted_threshold = (1.0 - report.kappa / 2) * (n / 4.0);

  std::vector<std::uint64_t> fibre = fibre_masks(n, report.k, report.s);
  report.fibre_size = BigInt(fibre.size());

  std::vector<char> in_family(fibre.size(), 0);
  long long family = 0, restricted = 0;
  for (std::size_t idx = 0; idx < fibre.size(); ++idx) {
    int quarter_count = std::popcount(fibre[idx] & quarter_mask);
    if (static_cast<double>(quarter_count) >= restricted_threshold) {
      ++restricted;
    } else {
      in_family[idx] = 1;
      ++family;
    }
  }
  report.family_size = BigInt(family);
  report.restricted_size = BigInt(restricted);

  long long fibre_pairs = 0, family_pairs = 0;
  for (std::size_t a = 0; a < fibre.size(); ++a) {
    for (std::size_t b = 0; b < fibre.size(); ++b) {
      if (a == b) continue;
      std::uint64_t common = fibre[a] & fibre[b];
      if (std::popcount(common) != report.t) continue;
      if (mask_sum(common) != report.w) continue;
      ++fibre_pairs;
      // Definition recheck on the counted pair.
      if (std::popcount(common) != report.t || mask_sum(common) != report.w)
        ++report.pair_recheck_failures;
      int ell = std::popcount(common & quarter_mask);
      if (static_cast<double>(ell) < ell_floor) ++report.ell_bound_violations;
      if (in_family[a] && in_family[b]) ++family_pairs;
    }
  }
  report.fibre_pairs = BigInt(fibre_pairs);
  report.family_pairs = BigInt(family_pairs);
  report.pair_fibre_empty = fibre_pairs == 0;
  report.density = fibre.empty() ? 0.0 : static_cast<double>(family) / fibre.size();
  report.verified = family_pairs == 0 && report.ell_bound_violations == 0 &&
                    report.pair_recheck_failures == 0;
  return report;
}

Ce2Report build_and_verify_ce2(int n, double zeta, std::uint64_t seed, int draws) {
  if (!(zeta > 0)) throw std::invalid_argument("ce2: zeta > 0");
  if (n > 20) throw std::invalid_argument("ce2: fibre too large (n <= 20)");
  Ce2Report report;
  report.n = n;
  report.zeta = zeta;
  report.seed = seed;
  report.k = 2LL * n / 3;
  report.s = static_cast<long long>(std::floor((2.0 / 3) * choose2(n)));
  report.t = static_cast<long long>(std::floor((1.0 / 3 + zeta) * n + 1e-9));
  report.w = static_cast<long long>(std::floor((1.0 / 3 + zeta) * choose2(n) + 1e-9));
  report.u_size = static_cast<int>(std::floor(2 * zeta * n + 1e-9)) + 1;
  if (2 * zeta * n + 1 > n / 3.0 + 1e-9)
    throw std::invalid_argument("ce2: 2 zeta n + 1 <= n/3 violated");

  std::vector<std::uint64_t> fibre = fibre_masks(n, report.k, report.s);
  report.fibre_size = BigInt(fibre.size());

  long long fibre_pairs = 0;
  for (std::size_t a = 0; a < fibre.size(); ++a)
    for (std::size_t b = 0; b < fibre.size(); ++b) {
      if (a == b) continue;
      std::uint64_t common = fibre[a] & fibre[b];
      if (std::popcount(common) == report.t && mask_sum(common) == report.w) ++fibre_pairs;
    }
  report.fibre_pairs = BigInt(fibre_pairs);

  // The expectation argument: draw U at random, keep the draw maximising
  // |A_U|.
  Rng root(seed);
  std::uint64_t best_u = 0;
  long long best_family = -1;
  for (int draw = 0; draw < draws; ++draw) {
    Rng rng = root.split(static_cast<std::uint64_t>(draw));
    std::uint64_t u_mask = 0;
    while (std::popcount(u_mask) < report.u_size)
      u_mask |= (1ULL << rng.next_below(static_cast<std::uint64_t>(n)));
    long long family = 0;
    for (std::uint64_t mask : fibre)
      if ((mask & u_mask) == 0) ++family;
    if (family > best_family) {
      best_family = family;
      best_u = u_mask;
    }
  }
  std::uint64_t bits = best_u;
  while (bits) {
    report.u_set.push_back(std::countr_zero(bits) + 1);
    bits &= bits - 1;
  }
  report.family_size = BigInt(best_family);
  report.density =
      fibre.empty() ? 0.0 : static_cast<double>(best_family) / fibre.size();

  report.pigeonhole_bound = 2 * report.k - (n - report.u_size);
  report.pigeonhole_holds = report.pigeonhole_bound >= report.t + 1;

  std::vector<std::uint64_t> family_masks;
  for (std::uint64_t mask : fibre)
    if ((mask & best_u) == 0) family_masks.push_back(mask);

  long long family_pairs = 0;
  long long min_intersection = n + 1;
  for (std::size_t a = 0; a < family_masks.size(); ++a)
    for (std::size_t b = 0; b < family_masks.size(); ++b) {
      if (a == b) continue;
      std::uint64_t common = family_masks[a] & family_masks[b];
      long long size = std::popcount(common);
      if (size == report.t && mask_sum(common) == report.w) ++family_pairs;
      if (size < min_intersection) {
        min_intersection = size;
        report.equality_witness_a.clear();
        report.equality_witness_b.clear();
        for (int i = 0; i < n; ++i) {
          if (family_masks[a] & (1ULL << i)) report.equality_witness_a.push_back(i + 1);
          if (family_masks[b] & (1ULL << i)) report.equality_witness_b.push_back(i + 1);
        }
      }
    }
  report.family_pairs = BigInt(family_pairs);
  report.min_intersection = family_masks.size() > 1 ? min_intersection : 0;
  report.verified = family_pairs == 0 && report.pigeonhole_holds &&
                    (family_masks.size() <= 1 || min_intersection >= report.pigeonhole_bound);
  return report;
}

VcObstructionReport vc_obstruction_family(int n) {
  if (n % 3 != 0) throw std::invalid_argument("vc_obstruction_family: need 3 | n");
  return vc_obstruction_family(n, 2LL * n / 3, n / 3);
}

VcObstructionReport vc_obstruction_family(int n, long long k, long long t) {
  if (n > 18) throw std::invalid_argument("vc_obstruction_family: n <= 18");
  VcObstructionReport report;
  report.n = n;
  report.k = k;
  report.t = t;

  // All k-subsets as masks.
  std::vector<std::uint64_t> sets;
  std::uint64_t limit = 1ULL << n;
  for (std::uint64_t mask = 0; mask < limit; ++mask)
    if (std::popcount(mask) == k) sets.push_back(mask);

  // Pair family over the 4-letter alphabet (a_i, b_i), letter = 2 a + b.
  std::vector<std::vector<int>> family;
  bool letter00_seen = false;
  for (std::uint64_t a : sets)
    for (std::uint64_t b : sets) {
      if (std::popcount(a & b) != t) continue;
      std::vector<int> word(n);
      for (int i = 0; i < n; ++i) {
        int bit_a = (a >> i) & 1, bit_b = (b >> i) & 1;
        word[i] = 2 * bit_a + bit_b;
        if (word[i] == 0) letter00_seen = true;
      }
      family.push_back(std::move(word));
    }
  report.family_size = static_cast<long long>(family.size());
  report.letter00_absent = !letter00_seen;
  report.vc = vc_dim(family, n, 4);
  report.uvc = uvc_dim(family, n, 4);
  return report;
}

}  // namespace vecint
