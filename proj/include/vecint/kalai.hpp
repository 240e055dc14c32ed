// Limit analytics for the Kalai setting: the logistic profile f_lambda, the
// pair profile g^pi, the moment maps h and h*, their inversion, the popular
// intersection density beta*, and the classification of quadruples
// (alpha1, alpha2, beta1, beta2) against the families Gamma1 (popular
// intersections), Gamma2 (doubly random) and Gamma3 (uniformly random sets).
#pragma once

#include "vecint/array.hpp"

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vecint {

// Lambda = {(x, y) : 0 < x < 1, x^2 < y < 2x - x^2}, the region where the
// fibre is exponentially large. Strict inequalities.
bool in_lambda(double x, double y);

// Signed l1-style distance surrogate to Lambda, 0 inside (computed by 1-D
// projection in y when x is admissible, grid fallback otherwise).
double lambda_distance(double x, double y);

// f_lambda(x) = e^{l1 + l2 x} / (1 + e^{l1 + l2 x}).
double f_lambda(const Eigen::Vector2d& lambda, double x);

// Pair profile, values ordered (g00, g01, g10, g11); g01 = g10 and the four
// values sum to 1. pi is ordered (pi1, pi1', pi2, pi2'):
//   Z(x)  = 1 + 2 e^{pi1 + pi2 x} + e^{pi1' + pi2' x},
//   g01   = e^{pi1 + pi2 x} / Z,   g11 = e^{pi1' + pi2' x} / Z.
std::array<double, 4> g_pi(const Eigen::Vector4d& pi, double x);

// Moment maps: h(lambda) = int_0^1 (1, 2x) f_lambda(x) dx in Lambda, and
// h*(pi) = int_0^1 (1, 2x) g^pi_{1,1}(x) dx.
Eigen::Vector2d h_map(const Eigen::Vector2d& lambda);
Eigen::Vector2d hstar_map(const Eigen::Vector4d& pi);

// Jacobian of h (positive definite in the sense of positive real spectrum).
Eigen::Matrix2d h_jacobian(const Eigen::Vector2d& lambda);

// Newton inversion of h on Lambda. Throws outside Lambda; near-boundary
// divergence (|lambda| beyond the cap) is reported as boundary.
struct HInverseResult {
  Eigen::Vector2d lambda;
  bool boundary = false;
  double residual = 0;
};
HInverseResult h_inverse(double alpha1, double alpha2, double tol = 1e-12);

// beta*(alpha) = int_0^1 (1, 2x) f_lambda(x)^2 dx with lambda = h^{-1}(alpha).
Eigen::Vector2d beta_star(double alpha1, double alpha2);

struct KalaiQuadruple {
  double alpha1 = 0, alpha2 = 0, beta1 = 0, beta2 = 0;
};

// The witnessing Boltzmann parameters for membership in Gamma:
//   Gamma1: pi = (l1, 2 l1, l2, 2 l2);
//   Gamma2: pi = (pi1, pi1', 0, 0) solving g11 = beta, g01 = alpha - beta;
//   Gamma3: pi = (pi1, 0, pi2, 0) with (pi1, pi2) = -h^{-1}(2 b1, 2 b2)
//           (the sign makes h*(pi) = (b1, b2) hold; see README notes).
// Returns nullopt off Gamma (within tol).
struct GammaWitness {
  std::string family;  // "Gamma1" | "Gamma2" | "Gamma3"
  Eigen::Vector4d pi;
};
std::optional<GammaWitness> pi_for(const KalaiQuadruple& g, double tol = 1e-9);

enum class KalaiVerdict { kalai, not_kalai, boundary };

const char* to_string(KalaiVerdict verdict);

struct KalaiReport {
  bool in_lambda = false;
  std::vector<GammaWitness> memberships;
  double distance = 0;                    // min over the three family surrogates
  std::map<std::string, double> family_distance;
  std::map<std::string, double> margins;  // boundary gaps per family
  KalaiVerdict verdict = KalaiVerdict::boundary;
};

// Distance dichotomy: "kalai" iff the surrogate distance is <= tol and the
// winning family's boundary margin is >= 10 tol; "not-kalai" iff the
// distance is >= 10 tol; boundary otherwise.
KalaiReport classify(const KalaiQuadruple& g, double tol = 1e-6);

// General-dimension beta*: nodes x_k in [0,1]^D with weights w_k discretise
// a positive density; h(lambda) = sum_k w_k x_k sigma(lambda . x_k) is
// inverted by Newton (the Jacobian is positive definite), then
// beta* = sum_k w_k x_k sigma(lambda . x_k)^2.
struct WeightedNodes {
  std::vector<Vec> nodes;
  std::vector<double> weights;
};

// Tensor Gauss-Legendre discretisation of a density on [0,1]^D
// (32 nodes per axis, D <= 3). The density must integrate to 1 (checked
// to 1e-6).
WeightedNodes tensor_density_nodes(int dim, const std::function<double(const Vec&)>& density,
                                   int nodes_per_axis = 32);

struct BetaStarGeneralResult {
  Vec beta;
  Vec lambda;
  double residual = 0;
};

BetaStarGeneralResult beta_star_general(const Vec& alpha, const WeightedNodes& nodes,
                                        double tol = 1e-10);
BetaStarGeneralResult beta_star_general(const Vec& alpha,
                                        const std::function<double(const Vec&)>& density,
                                        double tol = 1e-10);

}  // namespace vecint
