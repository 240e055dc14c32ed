#include "vecint/kalai.hpp"

#include "vecint/gauss_legendre.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>

namespace vecint {

namespace {
constexpr int kQuadNodes = 64;

double sigmoid(double t) {
  if (t >= 0) return 1.0 / (1.0 + std::exp(-t));
  double e = std::exp(t);
  return e / (1.0 + e);
}
}  // namespace

bool in_lambda(double x, double y) { return x > 0 && x < 1 && y > x * x && y < 2 * x - x * x; }

double lambda_distance(double x, double y) {
  auto y_gap = [&](double u, double v) {
    double lo = u * u, hi = 2 * u - u * u;
    if (v < lo) return lo - v;
    if (v > hi) return v - hi;
    return 0.0;
  };
  if (x > 0 && x < 1) return y_gap(x, y);
  // 1-D projection in x as well: scan candidate x' on a fine grid.
  double best = std::numeric_limits<double>::infinity();
  const int grid = 2000;
  for (int k = 1; k < grid; ++k) {
    double u = static_cast<double>(k) / grid;
    best = std::min(best, std::abs(x - u) + y_gap(u, y));
  }
  return best;
}

double f_lambda(const Eigen::Vector2d& lambda, double x) {
  return sigmoid(lambda[0] + lambda[1] * x);
}

std::array<double, 4> g_pi(const Eigen::Vector4d& pi, double x) {
  // Overflow-safe evaluation via a max shift of the three exponents
  // {0, pi1 + pi2 x, pi1' + pi2' x}.
  double s01 = pi[0] + pi[2] * x;
  double s11 = pi[1] + pi[3] * x;
  double shift = std::max({0.0, s01, s11});
  double e00 = std::exp(-shift);
  double e01 = std::exp(s01 - shift);
  double e11 = std::exp(s11 - shift);
  double z = e00 + 2 * e01 + e11;
  return {e00 / z, e01 / z, e01 / z, e11 / z};
}

Eigen::Vector2d h_map(const Eigen::Vector2d& lambda) {
  const QuadratureRule& rule = gauss_legendre_01(kQuadNodes);
  Eigen::Vector2d acc = Eigen::Vector2d::Zero();
  for (int k = 0; k < rule.nodes.size(); ++k) {
    double x = rule.nodes[k];
    double f = f_lambda(lambda, x);
    acc[0] += rule.weights[k] * f;
    acc[1] += rule.weights[k] * 2 * x * f;
  }
  return acc;
}

Eigen::Vector2d hstar_map(const Eigen::Vector4d& pi) {
  const QuadratureRule& rule = gauss_legendre_01(kQuadNodes);
  Eigen::Vector2d acc = Eigen::Vector2d::Zero();
  for (int k = 0; k < rule.nodes.size(); ++k) {
    double x = rule.nodes[k];
    double g11 = g_pi(pi, x)[3];
    acc[0] += rule.weights[k] * g11;
    acc[1] += rule.weights[k] * 2 * x * g11;
  }
  return acc;
}

Eigen::Matrix2d h_jacobian(const Eigen::Vector2d& lambda) {
  const QuadratureRule& rule = gauss_legendre_01(kQuadNodes);
  Eigen::Matrix2d jac = Eigen::Matrix2d::Zero();
  for (int k = 0; k < rule.nodes.size(); ++k) {
    double x = rule.nodes[k];
    double f = f_lambda(lambda, x);
    double fp = f * (1 - f);
    jac(0, 0) += rule.weights[k] * fp;
    jac(0, 1) += rule.weights[k] * x * fp;
    jac(1, 0) += rule.weights[k] * 2 * x * fp;
    jac(1, 1) += rule.weights[k] * 2 * x * x * fp;
  }
  return jac;
}

HInverseResult h_inverse(double alpha1, double alpha2, double tol) {
  if (!in_lambda(alpha1, alpha2))
    throw std::invalid_argument("h_inverse: (alpha1, alpha2) outside Lambda");
  const double cap = 60.0;
  Eigen::Vector2d lambda = Eigen::Vector2d::Zero();
  Eigen::Vector2d target(alpha1, alpha2);
  HInverseResult result;
  for (int iter = 0; iter < 200; ++iter) {
    Eigen::Vector2d value = h_map(lambda);
    Eigen::Vector2d residual = value - target;
    result.residual = residual.lpNorm<1>();
    if (result.residual <= tol) {
      result.lambda = lambda;
      return result;
    }
    Eigen::Vector2d step = h_jacobian(lambda).partialPivLu().solve(residual);
    double scale = 1.0;
    // Damp so a single step never jumps past the cap.
    while ((lambda - scale * step).lpNorm<Eigen::Infinity>() > cap && scale > 1e-6) scale *= 0.5;
    // Backtrack on the residual norm.
    for (; scale > 1e-12; scale *= 0.5) {
      Eigen::Vector2d next = lambda - scale * step;
      if ((h_map(next) - target).lpNorm<1>() < result.residual) {
        lambda = next;
        break;
      }
    }
    if (scale <= 1e-12) break;
    if (lambda.lpNorm<Eigen::Infinity>() > cap) {
      result.lambda = lambda;
      result.boundary = true;
      return result;
    }
  }
  result.lambda = lambda;
  result.boundary = result.residual > tol;
  return result;
}

Eigen::Vector2d beta_star(double alpha1, double alpha2) {
  HInverseResult inv = h_inverse(alpha1, alpha2);
  if (inv.boundary) throw std::runtime_error("beta_star: h_inverse diverged near boundary");
  const QuadratureRule& rule = gauss_legendre_01(kQuadNodes);
  Eigen::Vector2d acc = Eigen::Vector2d::Zero();
  for (int k = 0; k < rule.nodes.size(); ++k) {
    double x = rule.nodes[k];
    double f = f_lambda(inv.lambda, x);
    acc[0] += rule.weights[k] * f * f;
    acc[1] += rule.weights[k] * 2 * x * f * f;
  }
  // Jensen sanity: alpha1^2 <= beta1 <= alpha1.
  if (!(acc[0] >= alpha1 * alpha1 - 1e-9 && acc[0] <= alpha1 + 1e-9))
    throw std::runtime_error("beta_star: sanity bounds violated");
  return acc;
}

const char* to_string(KalaiVerdict verdict) {
  switch (verdict) {
    case KalaiVerdict::kalai: return "kalai";
    case KalaiVerdict::not_kalai: return "not-kalai";
    case KalaiVerdict::boundary: return "boundary";
  }
  return "unknown";
}

namespace {

// Gamma1: alpha1 != alpha2 and beta = beta*(alpha).
std::optional<GammaWitness> gamma1_witness(const KalaiQuadruple& g, double tol) {
  if (g.alpha1 == g.alpha2) return std::nullopt;
  Eigen::Vector2d bs;
  try {
    bs = beta_star(g.alpha1, g.alpha2);
  } catch (const std::runtime_error&) {
    return std::nullopt;  // inversion diverged hugging the Lambda boundary
  }
  if (std::abs(bs[0] - g.beta1) + std::abs(bs[1] - g.beta2) > tol) return std::nullopt;
  Eigen::Vector2d lambda = h_inverse(g.alpha1, g.alpha2).lambda;
  GammaWitness witness;
  witness.family = "Gamma1";
  witness.pi << lambda[0], 2 * lambda[0], lambda[1], 2 * lambda[1];
  return witness;
}

// Gamma2: alpha1 = alpha2 = alpha, beta1 = beta2 = beta,
// max(2 alpha - 1, 0) < beta < alpha.
std::optional<GammaWitness> gamma2_witness(const KalaiQuadruple& g, double tol) {
  if (std::abs(g.alpha1 - g.alpha2) > tol || std::abs(g.beta1 - g.beta2) > tol)
    return std::nullopt;
  double alpha = 0.5 * (g.alpha1 + g.alpha2);
  double beta = 0.5 * (g.beta1 + g.beta2);
  if (!(beta > std::max(2 * alpha - 1, 0.0) && beta < alpha)) return std::nullopt;
  // g11 = beta and g01 = alpha - beta with pi2 = pi2' = 0 give two linear
  // equations for (e^{pi1}, e^{pi1'}).
  double z = 1.0 / (1.0 - 2 * alpha + beta);
  GammaWitness witness;
  witness.family = "Gamma2";
  witness.pi << std::log((alpha - beta) * z), std::log(beta * z), 0.0, 0.0;
  return witness;
}

// Gamma3: alpha = (1/2, 1/2) and (2 beta1, 2 beta2) in Lambda.
std::optional<GammaWitness> gamma3_witness(const KalaiQuadruple& g, double tol) {
  if (std::abs(g.alpha1 - 0.5) > tol || std::abs(g.alpha2 - 0.5) > tol ||
      !in_lambda(2 * g.beta1, 2 * g.beta2))
    return std::nullopt;
  HInverseResult inv = h_inverse(2 * g.beta1, 2 * g.beta2);
  if (inv.boundary) return std::nullopt;
  GammaWitness witness;
  witness.family = "Gamma3";
  // With pi1' = pi2' = 0, g11(x) = (1 - sigma(pi1 + pi2 x)) / 2, so
  // h*(pi) = (beta1, beta2) needs the negated inverse.
  witness.pi << -inv.lambda[0], 0.0, -inv.lambda[1], 0.0;
  return witness;
}

}  // namespace

std::optional<GammaWitness> pi_for(const KalaiQuadruple& g, double tol) {
  if (!in_lambda(g.alpha1, g.alpha2)) return std::nullopt;
  if (auto witness = gamma1_witness(g, tol)) return witness;
  if (auto witness = gamma2_witness(g, tol)) return witness;
  if (auto witness = gamma3_witness(g, tol)) return witness;
  return std::nullopt;
}

KalaiReport classify(const KalaiQuadruple& g, double tol) {
  if (!in_lambda(g.alpha1, g.alpha2))
    throw std::invalid_argument("classify: (alpha1, alpha2) outside Lambda");
  KalaiReport report;
  report.in_lambda = true;

  const double inf = std::numeric_limits<double>::infinity();

  // Gamma1 surrogate: ||beta - beta*(alpha)||_1 when alpha1 != alpha2.
  // Points hugging the Lambda boundary can defeat the inversion; Gamma1 is
  // then unreachable rather than an error.
  double d1 = inf;
  if (g.alpha1 != g.alpha2) {
    try {
      Eigen::Vector2d bs = beta_star(g.alpha1, g.alpha2);
      d1 = std::abs(bs[0] - g.beta1) + std::abs(bs[1] - g.beta2);
    } catch (const std::runtime_error&) {
    }
  }
  report.family_distance["Gamma1"] = d1;
  report.margins["Gamma1"] = std::max(0.0, std::abs(g.alpha1 - g.alpha2));

  // Gamma2 surrogate.
  double alpha = 0.5 * (g.alpha1 + g.alpha2);
  double lo2 = std::max(2 * g.alpha1 - 1, 0.0);
  double interval_gap = 0;
  if (g.beta1 <= lo2) interval_gap = lo2 - g.beta1;
  else if (g.beta1 >= g.alpha1) interval_gap = g.beta1 - g.alpha1;
  double d2 = std::abs(g.alpha1 - g.alpha2) + std::abs(g.beta1 - g.beta2) + interval_gap;
  report.family_distance["Gamma2"] = d2;
  double beta = 0.5 * (g.beta1 + g.beta2);
  report.margins["Gamma2"] =
      std::max(0.0, std::min(beta - std::max(2 * alpha - 1, 0.0), alpha - beta));

  // Gamma3 surrogate.
  double d3 = std::abs(g.alpha1 - 0.5) + std::abs(g.alpha2 - 0.5) +
              lambda_distance(2 * g.beta1, 2 * g.beta2);
  report.family_distance["Gamma3"] = d3;
  {
    double u = 2 * g.beta1, v = 2 * g.beta2;
    report.margins["Gamma3"] = std::max(
        0.0, std::min(std::min(u, 1 - u), std::min(v - u * u, 2 * u - u * u - v)));
  }

  report.distance = std::min({d1, d2, d3});
  // Families can overlap (Gamma2 and Gamma3 meet at alpha = 1/2); record
  // every witness.
  if (auto witness = gamma1_witness(g, tol)) report.memberships.push_back(*witness);
  if (auto witness = gamma2_witness(g, tol)) report.memberships.push_back(*witness);
  if (auto witness = gamma3_witness(g, tol)) report.memberships.push_back(*witness);

  std::string winner = "Gamma1";
  for (const auto& [family, dist] : report.family_distance)
    if (dist < report.family_distance[winner]) winner = family;

  if (report.distance >= 10 * tol) {
    report.verdict = KalaiVerdict::not_kalai;
  } else if (report.distance <= tol && report.margins[winner] >= 10 * tol) {
    report.verdict = KalaiVerdict::kalai;
  } else {
    // Never issue "kalai" within 10 tol of a family boundary; the
    // delta-versus-epsilon' hierarchy of the dichotomy is not resolved there.
    report.verdict = KalaiVerdict::boundary;
  }
  return report;
}

WeightedNodes tensor_density_nodes(int dim, const std::function<double(const Vec&)>& density,
                                   int nodes_per_axis) {
  if (dim < 1 || dim > 3) throw std::invalid_argument("tensor_density_nodes: D must be in [1,3]");
  const QuadratureRule& rule = gauss_legendre_01(nodes_per_axis);
  WeightedNodes result;
  std::vector<int> index(dim, 0);
  for (;;) {
    Vec x(dim);
    double w = 1;
    for (int d = 0; d < dim; ++d) {
      x[d] = rule.nodes[index[d]];
      w *= rule.weights[index[d]];
    }
    double p = density(x);
    if (p < 0) throw std::invalid_argument("tensor_density_nodes: density must be nonnegative");
    result.nodes.push_back(x);
    result.weights.push_back(w * p);
    int d = 0;
    while (d < dim && ++index[d] == nodes_per_axis) index[d++] = 0;
    if (d == dim) break;
  }
  double total = 0;
  for (double w : result.weights) total += w;
  if (std::abs(total - 1.0) > 1e-6)
    throw std::invalid_argument("tensor_density_nodes: density does not integrate to 1");
  return result;
}

BetaStarGeneralResult beta_star_general(const Vec& alpha, const WeightedNodes& nodes,
                                        double tol) {
  const int dim = static_cast<int>(alpha.size());
  for (int d = 0; d < dim; ++d)
    if (!(alpha[d] > 0 && alpha[d] < 1))
      throw std::invalid_argument("beta_star_general: alpha outside (0,1)^D");

  auto moment = [&](const Vec& lambda, int power) {
    Vec acc = Vec::Zero(dim);
    for (std::size_t k = 0; k < nodes.nodes.size(); ++k) {
      double f = sigmoid(lambda.dot(nodes.nodes[k]));
      acc += nodes.weights[k] * std::pow(f, power) * nodes.nodes[k];
    }
    return acc;
  };
  // The singular direction: h(0) is the only value with no finite preimage
  // guarantee; the uniqueness argument needs lambda != 0.
  Vec h0 = moment(Vec::Zero(dim), 1);
  if ((alpha - h0).lpNorm<Eigen::Infinity>() < 1e-8)
    throw std::invalid_argument("beta_star_general: alpha at the singular centre h(0)");

  Vec lambda = Vec::Zero(dim);
  BetaStarGeneralResult result;
  double residual = (moment(lambda, 1) - alpha).lpNorm<1>();
  for (int iter = 0; iter < 300; ++iter) {
    if (residual <= tol) break;
    Mat jac = Mat::Zero(dim, dim);
    for (std::size_t k = 0; k < nodes.nodes.size(); ++k) {
      double f = sigmoid(lambda.dot(nodes.nodes[k]));
      jac += nodes.weights[k] * f * (1 - f) * nodes.nodes[k] * nodes.nodes[k].transpose();
    }
    Vec step = jac.ldlt().solve(moment(lambda, 1) - alpha);
    double scale = 1.0;
    for (; scale > 1e-12; scale *= 0.5) {
      Vec next = lambda - scale * step;
      double r = (moment(next, 1) - alpha).lpNorm<1>();
      if (r < residual) {
        lambda = next;
        residual = r;
        break;
      }
    }
    if (scale <= 1e-12) break;
    if (lambda.lpNorm<Eigen::Infinity>() > 200)
      throw std::runtime_error("beta_star_general: alpha outside the range of h");
  }
  if (residual > std::max(tol, 1e-8))
    throw std::runtime_error("beta_star_general: Newton did not converge");
  result.lambda = lambda;
  result.residual = residual;
  result.beta = moment(lambda, 2);
  return result;
}

BetaStarGeneralResult beta_star_general(const Vec& alpha,
                                        const std::function<double(const Vec&)>& density,
                                        double tol) {
  return beta_star_general(alpha, tensor_density_nodes(static_cast<int>(alpha.size()), density),
                           tol);
}

}  // namespace vecint
