#include "vecint/gauss_legendre.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace vecint {

namespace {

// Legendre nodes on [-1,1] by Newton iteration from the Chebyshev guess,
// then mapped to [0,1].
QuadratureRule build_rule(int n) {
  Eigen::VectorXd x(n), w(n);
  const double pi = std::acos(-1.0);
  for (int i = 0; i < n; ++i) {
    double t = std::cos(pi * (i + 0.75) / (n + 0.5));
    double p0 = 0, p1 = 0;
    for (int iter = 0; iter < 100; ++iter) {
      p0 = 1.0;
      p1 = 0.0;
      for (int k = 0; k < n; ++k) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k + 1.0) * t * p1 - k * p2) / (k + 1);
      }
      double dp = n * (t * p0 - p1) / (t * t - 1.0);
      double step = p0 / dp;
      t -= step;
      if (std::abs(step) < 1e-16) break;
    }
    // Recompute derivative at the converged node for the weight.
    p0 = 1.0;
    p1 = 0.0;
    for (int k = 0; k < n; ++k) {
      double p2 = p1;
      p1 = p0;
      p0 = ((2.0 * k + 1.0) * t * p1 - k * p2) / (k + 1);
    }
    double dp = n * (t * p0 - p1) / (t * t - 1.0);
    x[i] = t;
    w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
  }
  QuadratureRule rule;
  rule.nodes = (x.array() + 1.0) * 0.5;
  rule.weights = w * 0.5;
  return rule;
}

}  // namespace

const QuadratureRule& gauss_legendre_01(int n) {
  static std::map<int, QuadratureRule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_rule(n)).first;
  return it->second;
}

}  // namespace vecint
