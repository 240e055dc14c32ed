#include "vecint/maxent.hpp"

#include <Eigen/Cholesky>

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace vecint {

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::converged: return "converged";
    case SolveStatus::infeasible: return "infeasible";
    case SolveStatus::boundary: return "boundary";
    case SolveStatus::iteration_limit: return "iteration_limit";
  }
  return "unknown";
}

const char* to_string(HmaxStatus status) {
  switch (status) {
    case HmaxStatus::converged: return "converged";
    case HmaxStatus::empty: return "empty";
    case HmaxStatus::boundary: return "boundary";
    case HmaxStatus::iteration_limit: return "iteration_limit";
  }
  return "unknown";
}

LogPartition log_partition(const VectorArray& array, const Vec& lambda) {
  if (lambda.size() != array.dim()) throw std::invalid_argument("log_partition: lambda size != D");
  const int n = array.n();
  const int num_letters = array.num_letters();
  const int dim = array.dim();
  LogPartition result;
  result.gradient = Vec::Zero(dim);
  result.hessian = Mat::Zero(dim, dim);
  std::vector<double> scores(num_letters), probs(num_letters);
  for (int i = 0; i < n; ++i) {
    double shift = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < num_letters; ++j) {
      scores[j] = lambda.dot(array.entry(i, j).cast<double>());
      shift = std::max(shift, scores[j]);
    }
    double z = 0;
    for (int j = 0; j < num_letters; ++j) z += std::exp(scores[j] - shift);
    result.value += shift + std::log(z);
    Vec mean = Vec::Zero(dim);
    for (int j = 0; j < num_letters; ++j) {
      probs[j] = std::exp(scores[j] - shift) / z;
      mean += probs[j] * array.entry(i, j).cast<double>();
    }
    result.gradient += mean;
    for (int j = 0; j < num_letters; ++j) {
      Vec centred = array.entry(i, j).cast<double>() - mean;
      result.hessian += probs[j] * centred * centred.transpose();
    }
  }
  return result;
}

ProductMeasure boltzmann_measure(const VectorArray& array, const Vec& lambda) {
  const int n = array.n();
  const int num_letters = array.num_letters();
  Mat p(n, num_letters);
  std::vector<double> scores(num_letters);
  for (int i = 0; i < n; ++i) {
    double shift = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < num_letters; ++j) {
      scores[j] = lambda.dot(array.entry(i, j).cast<double>());
      shift = std::max(shift, scores[j]);
    }
    double z = 0;
    for (int j = 0; j < num_letters; ++j) z += std::exp(scores[j] - shift);
    for (int j = 0; j < num_letters; ++j) p(i, j) = std::exp(scores[j] - shift) / z;
  }
  return ProductMeasure(std::move(p));
}

namespace {

double scaled_residual(const Vec& gradient, const Vec& target, const Vec& scaling, int n) {
  double worst = 0;
  for (int d = 0; d < gradient.size(); ++d)
    worst = std::max(worst, std::abs(gradient[d] - target[d]) / (scaling[d] * n));
  return worst;
}

// Newton direction with a ridge fallback when the covariance is singular
// (e.g. constant or collinear entries).
Vec newton_direction(const Mat& hessian, const Vec& gradient) {
  Mat h = hessian;
  double ridge = 0;
  for (int attempt = 0; attempt < 6; ++attempt) {
    Eigen::LDLT<Mat> ldlt(h);
    if (ldlt.info() == Eigen::Success) {
      Vec dir = ldlt.solve(-gradient);
      if (dir.allFinite() && gradient.dot(dir) < 0) return dir;
    }
    ridge = (ridge == 0) ? 1e-10 * (1.0 + h.trace()) : ridge * 100;
    h = hessian + ridge * Mat::Identity(h.rows(), h.cols());
  }
  return -gradient;  // gradient descent as a last resort
}

}  // namespace

MaxEntSolution solve_maxent(const VectorArray& array, const Vec& target,
                            const MaxEntOptions& options) {
  if (target.size() != array.dim()) throw std::invalid_argument("solve_maxent: target size != D");
  const int n = array.n();
  const Vec& scaling = array.scaling();

  Vec lambda = Vec::Zero(array.dim());
  LogPartition lp = log_partition(array, lambda);
  double dual_value = lp.value - lambda.dot(target);
  double residual = scaled_residual(lp.gradient, target, scaling, n);

  MaxEntSolution solution;
  std::vector<double> residual_history{residual};
  int iterations = 0;
  SolveStatus status = SolveStatus::iteration_limit;

  while (iterations < options.max_iter) {
    if (residual <= options.tol) {
      status = SolveStatus::converged;
      break;
    }
    // Divergence heuristic: the dual minimiser escapes to infinity exactly
    // when the target is not an interior expectation.
    if (lambda.lpNorm<Eigen::Infinity>() > options.lambda_cap &&
        residual_history.size() > 20) {
      double past = residual_history[residual_history.size() - 21];
      if (past - residual < 1e-12) {
        status = SolveStatus::infeasible;
        break;
      }
    }

    Vec dual_gradient = lp.gradient - target;
    Vec direction = newton_direction(lp.hessian, dual_gradient);
    double slope = dual_gradient.dot(direction);
    double step = 1.0;
    Vec candidate;
    LogPartition lp_next;
    bool accepted = false;
    while (step >= 1e-14) {
      candidate = lambda + step * direction;
      lp_next = log_partition(array, candidate);
      double value = lp_next.value - candidate.dot(target);
      if (value <= dual_value + 1e-4 * step * slope) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;  // no descent possible at double precision
    lambda = candidate;
    lp = lp_next;
    dual_value = lp.value - lambda.dot(target);
    residual = scaled_residual(lp.gradient, target, scaling, n);
    residual_history.push_back(residual);
    ++iterations;
  }
  if (status == SolveStatus::iteration_limit && residual <= options.tol)
    status = SolveStatus::converged;

  ProductMeasure measure = boltzmann_measure(array, lambda);
  if (status == SolveStatus::converged &&
      measure.probabilities().minCoeff() < options.degenerate_cell)
    status = SolveStatus::boundary;
  if (status == SolveStatus::iteration_limit &&
      lambda.lpNorm<Eigen::Infinity>() > options.lambda_cap && residual < 1e-3)
    status = SolveStatus::boundary;  // target on the hull boundary: dual
                                     // diverges while the residual vanishes

  solution.measure = measure;
  solution.dual = lambda;
  solution.entropy_bits = entropy(measure);
  solution.residual = residual;
  solution.status = status;
  solution.iterations = iterations;
  return solution;
}

TildeArray tilde(const VectorArray& binary, const IntVec& z, const IntVec& w) {
  if (!binary.is_binary()) throw std::invalid_argument("tilde: need binary array");
  const int n = binary.n();
  const int dim = binary.dim();
  std::vector<std::vector<IntVec>> entries(n);
  for (int i = 0; i < n; ++i) {
    const IntVec& v = binary.entry(i, 1);
    IntVec v11 = IntVec::Zero(3 * dim), v10 = IntVec::Zero(3 * dim), v01 = IntVec::Zero(3 * dim);
    v11.segment(0, dim) = v;
    v11.segment(dim, dim) = v;
    v11.segment(2 * dim, dim) = v;
    v10.segment(0, dim) = v;
    v01.segment(dim, dim) = v;
    entries[i].assign(4, IntVec::Zero(3 * dim));
    entries[i][pair_letter(0, 1)] = v01;
    entries[i][pair_letter(1, 0)] = v10;
    entries[i][pair_letter(1, 1)] = v11;
  }
  Vec scaling(3 * dim);
  scaling.segment(0, dim) = binary.scaling();
  scaling.segment(dim, dim) = binary.scaling();
  scaling.segment(2 * dim, dim) = binary.scaling();
  IntVec x(3 * dim);
  x.segment(0, dim) = z;
  x.segment(dim, dim) = z;
  x.segment(2 * dim, dim) = w;
  TildeArray result;
  result.array = VectorArray(n, pair_alphabet_labels(), 3 * dim, std::move(entries),
                             std::move(scaling));
  result.target = x;
  return result;
}

PairMaxEntSolution solve_pair_maxent(const VectorArray& binary, const IntVec& z,
                                     const IntVec& w, const MaxEntOptions& options) {
  TildeArray t = tilde(binary, z, w);
  MaxEntSolution base = solve_maxent(t.array, t.target, options);
  PairMaxEntSolution solution;
  solution.measure = PairMeasure(base.measure.probabilities(), 2, 2);
  solution.marginal1 = marginal(solution.measure, 1);
  solution.marginal2 = marginal(solution.measure, 2);
  solution.dual = base.dual;
  solution.entropy_bits = base.entropy_bits;
  solution.residual = base.residual;
  solution.status = base.status;
  solution.iterations = base.iterations;
  return solution;
}

namespace {

struct HmaxCoordinate {
  double p = 0;
  double lo = 0, hi = 0;  // feasible box for x = q[(1,1)]
  Vec v;                  // the array vector
  bool fixed = false;     // box is a single point
  double x = 0;
  bool clamped = false;
};

// Entropy of the pair cell distribution (x, p-x, p-x, 1-2p+x) in nats.
double cell_entropy_nats(double p, double x) {
  auto term = [](double value) { return value > 0 ? -value * std::log(value) : 0.0; };
  return term(x) + 2 * term(p - x) + term(1 - 2 * p + x);
}

double cell_entropy_bits(double p, double x) { return cell_entropy_nats(p, x) / std::log(2.0); }

// Solve (p-x)^2 = c x (1-2p+x) for the unique root in [lo, hi]. The
// quadratic is (1-c) x^2 - (2p + c(1-2p)) x + p^2 = 0, and the ratio
// (p-x)^2 / (x(1-2p+x)) is strictly decreasing in x on the natural box.
double solve_cell(double p, double c, double lo, double hi) {
  const double a = 1.0 - c;
  const double b = 2.0 * p + c * (1.0 - 2.0 * p);  // negated linear coefficient
  const double cc = p * p;
  double root = std::numeric_limits<double>::quiet_NaN();
  if (std::abs(a) < 1e-14) {
    root = cc / b;
  } else {
    double disc = b * b - 4.0 * a * cc;
    if (disc >= 0 && std::isfinite(disc)) {
      double sq = std::sqrt(disc);
      double q = 0.5 * (b + (b >= 0 ? sq : -sq));
      double r1 = q / a;
      double r2 = cc / q;
      const double slack = 1e-12;
      bool ok1 = std::isfinite(r1) && r1 >= lo - slack && r1 <= hi + slack;
      bool ok2 = std::isfinite(r2) && r2 >= lo - slack && r2 <= hi + slack;
      if (ok1 && ok2) root = std::abs(r1 - p * p) < std::abs(r2 - p * p) ? r1 : r2;
      else if (ok1) root = r1;
      else if (ok2) root = r2;
    }
  }
  if (!std::isfinite(root)) {
    // Monotone bisection fallback on log((p-x)^2 / (x(1-2p+x))) - log c.
    double target = std::log(c);
    double f_lo = 2 * std::log(p - lo) - std::log(lo) - std::log(1 - 2 * p + lo);
    if (std::isfinite(f_lo) && f_lo <= target) return lo;  // argmax pinned at lo
    double left = lo, right = hi;
    for (int iter = 0; iter < 200; ++iter) {
      double mid = 0.5 * (left + right);
      double val = 2 * std::log(p - mid) - std::log(mid) - std::log(1 - 2 * p + mid);
      if (val > target) left = mid;
      else right = mid;
    }
    root = 0.5 * (left + right);
  }
  return std::clamp(root, lo, hi);
}

}  // namespace

HmaxSolution solve_hmax(const ProductMeasure& p, const VectorArray& binary, const Vec& target,
                        double kappa, const HmaxOptions& options) {
  if (!binary.is_binary()) throw std::invalid_argument("solve_hmax: need binary array");
  if (p.n() != binary.n() || p.num_letters() != 2)
    throw std::invalid_argument("solve_hmax: marginal shape mismatch");
  if (kappa < 0 || kappa >= 0.5) throw std::invalid_argument("solve_hmax: kappa in [0, 1/2)");
  const int n = binary.n();
  const int dim = binary.dim();
  const Vec& scaling = binary.scaling();

  HmaxSolution solution;
  solution.dual = Vec::Zero(dim);

  std::vector<HmaxCoordinate> coords(n);
  for (int i = 0; i < n; ++i) {
    auto& c = coords[i];
    c.p = p.p(i, 1);
    c.v = binary.entry(i, 1).cast<double>();
    if (kappa > 0) {
      c.lo = std::max(kappa, 2 * c.p - 1 + kappa);
      c.hi = std::min(c.p - kappa, 1.0 - kappa);
    } else {
      c.lo = std::max(0.0, 2 * c.p - 1);
      c.hi = c.p;
    }
    if (c.lo > c.hi + 1e-14) {
      solution.status = HmaxStatus::empty;  // Q is empty; H_max = 0 by convention
      solution.hmax_bits = 0;
      solution.measure = PairMeasure(Mat::Constant(1, 4, 0.25), 2, 2);
      return solution;
    }
    c.hi = std::max(c.hi, c.lo);
    if (c.hi - c.lo < 1e-14) {
      c.fixed = true;
      c.x = 0.5 * (c.lo + c.hi);
    }
  }

  Vec theta = Vec::Zero(dim);
  auto evaluate = [&](const Vec& th, std::vector<HmaxCoordinate>& cs, Vec& grad, Mat& hess,
                      double& dual_value) {
    grad = target;
    hess = Mat::Zero(dim, dim);
    dual_value = th.dot(target);
    for (auto& c : cs) {
      double s = th.dot(c.v);
      if (!c.fixed) {
        // exp guard: huge |s| pins x at the box edge
        double cexp = std::exp(std::clamp(s, -700.0, 700.0));
        c.x = solve_cell(c.p, cexp, c.lo, c.hi);
        double edge_tol = std::max(1e-12, 1e-6 * (c.hi - c.lo));
        c.clamped = (c.x <= c.lo + edge_tol) || (c.x >= c.hi - edge_tol);
        if (!c.clamped) {
          double dfdx = -2.0 / (c.p - c.x) - 1.0 / c.x - 1.0 / (1 - 2 * c.p + c.x);
          hess += (-1.0 / dfdx) * c.v * c.v.transpose();
        }
      }
      // Fixed coordinates still carry their linear term, keeping the value
      // consistent with the gradient for the line search.
      dual_value += cell_entropy_nats(c.p, c.x) - s * c.x;
      grad -= c.x * c.v;
    }
  };

  Vec grad;
  Mat hess;
  double dual_value;
  evaluate(theta, coords, grad, hess, dual_value);
  double residual = 0;
  auto update_residual = [&]() {
    residual = 0;
    for (int d = 0; d < dim; ++d)
      residual = std::max(residual, std::abs(grad[d]) / (scaling[d] * n));
  };
  update_residual();

  std::vector<double> history{residual};
  int iterations = 0;
  HmaxStatus status = HmaxStatus::iteration_limit;
  while (iterations < options.max_iter) {
    if (residual <= options.tol) {
      status = HmaxStatus::converged;
      break;
    }
    if (theta.lpNorm<Eigen::Infinity>() > options.theta_cap && history.size() > 20 &&
        history[history.size() - 21] - residual < 1e-13) {
      // Dual diverged: the target is outside (or on the boundary of) the
      // zonotope of achievable expectations, so Q is empty.
      status = HmaxStatus::empty;
      break;
    }
    // psi(theta) is convex with gradient (target - sum x_i v_i) = grad,
    // so the Newton step solves hess * delta = -grad.
    Vec direction = newton_direction(hess, grad);
    double slope = grad.dot(direction);
    double step = 1.0;
    bool accepted = false;
    std::vector<HmaxCoordinate> trial = coords;
    Vec trial_grad;
    Mat trial_hess;
    double trial_value;
    while (step >= 1e-14) {
      Vec candidate = theta + step * direction;
      trial = coords;
      evaluate(candidate, trial, trial_grad, trial_hess, trial_value);
      if (trial_value <= dual_value + 1e-4 * step * slope) {
        theta = candidate;
        coords = trial;
        grad = trial_grad;
        hess = trial_hess;
        dual_value = trial_value;
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;
    update_residual();
    history.push_back(residual);
    ++iterations;
  }
  if (status == HmaxStatus::iteration_limit && residual <= options.tol)
    status = HmaxStatus::converged;

  int clamped = 0;
  for (const auto& c : coords)
    if (c.clamped && !c.fixed) ++clamped;
  if (status == HmaxStatus::converged && clamped > 0) status = HmaxStatus::boundary;

  if (status == HmaxStatus::empty) {
    solution.status = status;
    solution.hmax_bits = 0;
    solution.measure = PairMeasure(Mat::Constant(1, 4, 0.25), 2, 2);
    solution.dual = theta;
    solution.residual = residual;
    solution.iterations = iterations;
    return solution;
  }

  Mat q(n, 4);
  double hbits = 0;
  double min_cell_value = 1.0;
  for (int i = 0; i < n; ++i) {
    const auto& c = coords[i];
    double x = c.x;
    q(i, pair_letter(0, 0)) = 1 - 2 * c.p + x;
    q(i, pair_letter(0, 1)) = c.p - x;
    q(i, pair_letter(1, 0)) = c.p - x;
    q(i, pair_letter(1, 1)) = x;
    hbits += cell_entropy_bits(c.p, x);
    min_cell_value = std::min(min_cell_value, q.row(i).minCoeff());
  }
  solution.measure = PairMeasure(q.cwiseMax(0.0), 2, 2);
  solution.dual = theta;
  solution.hmax_bits = hbits;
  solution.residual = residual;
  solution.min_cell = min_cell_value;
  solution.status = status;
  solution.iterations = iterations;
  solution.clamped = clamped;
  return solution;
}

}  // namespace vecint
