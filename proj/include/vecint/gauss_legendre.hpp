// Gauss-Legendre quadrature on [0,1]. The integrands here are logistic
// compositions (analytic on the closed interval), so a fixed 64-node rule
// reaches machine precision; no adaptivity.
#pragma once

#include <Eigen/Dense>

namespace vecint {

struct QuadratureRule {
  Eigen::VectorXd nodes;    // in (0,1)
  Eigen::VectorXd weights;  // sum to 1
};

// Nodes/weights for an n-point rule on [0,1]; cached per n.
const QuadratureRule& gauss_legendre_01(int n);

// Integrate f over [0,1] with the 64-node rule.
template <typename F>
double integrate_01(F&& f, int n = 64) {
  const QuadratureRule& rule = gauss_legendre_01(n);
  double acc = 0;
  for (int i = 0; i < rule.nodes.size(); ++i) acc += rule.weights[i] * f(rule.nodes[i]);
  return acc;
}

}  // namespace vecint
