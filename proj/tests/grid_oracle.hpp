// Test-side oracle for the pair-entropy maximisation: a dynamic program
// over an x-grid with the sum constraint kept exactly on the step lattice.
// Independent of the dual solver it checks.
#pragma once

#include "vecint/measures.hpp"

#include <cmath>
#include <vector>

namespace vecint_test {

// Maximise sum_i [L(x_i) + 2 L(p_i - x_i) + L(1 - 2 p_i + x_i)] over the
// boxes [max(0, 2 p_i - 1), p_i] with sum_i x_i v_i = target exactly on the
// lattice of multiples of `step` (v integral, D = 1). Returns bits, or a
// large negative value when the lattice target is unreachable.
inline double hmax_grid_oracle_1d(const std::vector<double>& p,
                                  const std::vector<long long>& v, double target,
                                  double step) {
  const int n = static_cast<int>(p.size());
  long long span = 0;
  for (int i = 0; i < n; ++i) span += std::abs(v[i]);
  long long cells = static_cast<long long>(std::llround(span / step)) + 1;
  const double kNeg = -1e18;
  std::vector<double> best(2 * cells + 1, kNeg);
  auto index = [&](long long units) { return units + cells; };
  best[index(0)] = 0.0;
  for (int i = 0; i < n; ++i) {
    std::vector<double> next(2 * cells + 1, kNeg);
    double lo = std::max(0.0, 2 * p[i] - 1);
    double hi = p[i];
    // Absolute multiples of the step keep x * v_i exactly on the lattice,
    // so the oracle explores a subset of the true feasible set.
    long long s_lo = static_cast<long long>(std::ceil(lo / step - 1e-12));
    long long s_hi = static_cast<long long>(std::floor(hi / step + 1e-12));
    for (long long s = s_lo; s <= s_hi; ++s) {
      double x = static_cast<double>(s) * step;
      double h = vecint::entropy_term(x) + 2 * vecint::entropy_term(p[i] - x) +
                 vecint::entropy_term(1 - 2 * p[i] + x);
      long long units = s * v[i];
      for (long long cell = 0; cell < static_cast<long long>(best.size()); ++cell) {
        if (best[cell] <= kNeg / 2) continue;
        long long to = cell + units;
        if (to < 0 || to >= static_cast<long long>(next.size())) continue;
        next[to] = std::max(next[to], best[cell] + h);
      }
    }
    best = std::move(next);
  }
  long long target_units = std::llround(target / step);
  if (target_units < -cells || target_units > cells) return kNeg;
  return best[index(target_units)];
}

}  // namespace vecint_test
