// Convex dual solvers for maximum-entropy product measures under
// vector-valued expectation constraints. The dual of
//   max H(mu_p)  s.t.  sum_{i,j} p[i][j] v[i][j] = w
// over product measures is phi(lambda) = sum_i ln Z_i(lambda) - lambda.w
// with Z_i = sum_j exp(lambda.v[i][j]); its minimiser gives the Boltzmann
// form p[i][j] = Z_i^{-1} exp(lambda.v[i][j]).
#pragma once

#include "vecint/array.hpp"
#include "vecint/measures.hpp"

#include <optional>

namespace vecint {

enum class SolveStatus { converged, infeasible, boundary, iteration_limit };

const char* to_string(SolveStatus status);

struct LogPartition {
  double value = 0;  // sum_i ln Z_i, natural log
  Vec gradient;      // expected array value of the Boltzmann measure
  Mat hessian;       // its covariance; positive semidefinite
};

// Overflow-guarded evaluation (per-coordinate max shift).
LogPartition log_partition(const VectorArray& array, const Vec& lambda);

// Boltzmann product measure for a given dual vector.
ProductMeasure boltzmann_measure(const VectorArray& array, const Vec& lambda);

struct MaxEntOptions {
  double tol = 1e-8;        // residual in per-coordinate-scaled units (R_d * n)
  int max_iter = 200;
  double lambda_cap = 50.0;  // infeasibility heuristic threshold
  double degenerate_cell = 1e-7;  // converged measures below this are boundary
};

struct MaxEntSolution {
  ProductMeasure measure;
  Vec dual;
  double entropy_bits = 0;
  double residual = 0;  // scaled residual max_d |E_d - w_d| / (R_d n)
  SolveStatus status = SolveStatus::iteration_limit;
  int iterations = 0;
};

// Damped-Newton maximiser of the dual; w is the target expectation.
MaxEntSolution solve_maxent(const VectorArray& array, const Vec& target,
                            const MaxEntOptions& options = {});
inline MaxEntSolution solve_maxent(const VectorArray& array, const IntVec& target,
                                   const MaxEntOptions& options = {}) {
  return solve_maxent(array, target.cast<double>().eval(), options);
}

// The tilde construction: from a binary array V in Z^D, the
// (n, {0,1}x{0,1})-array in Z^{3D} with
//   v~[i][(1,1)] = (v_i, v_i, v_i), v~[i][(1,0)] = (v_i, 0, 0),
//   v~[i][(0,1)] = (0, v_i, 0),    v~[i][(0,0)] = 0,
// and target x~ = (z, z, w); its fibre is the set of ordered pairs (a, b)
// with V(a) = V(b) = z and V_cap(a, b) = w. Scaling R~ = (R, R, R).
struct TildeArray {
  VectorArray array;
  IntVec target;
};

TildeArray tilde(const VectorArray& binary, const IntVec& z, const IntVec& w);

struct PairMaxEntSolution {
  PairMeasure measure;
  ProductMeasure marginal1;
  ProductMeasure marginal2;
  Vec dual;  // in R^{3D}
  double entropy_bits = 0;
  double residual = 0;
  SolveStatus status = SolveStatus::iteration_limit;
  int iterations = 0;
};

// Maximum-entropy pair measure representing w-intersections inside the
// fibre at z: solve_maxent on the tilde array, with both marginals exposed.
PairMaxEntSolution solve_pair_maxent(const VectorArray& binary, const IntVec& z,
                                     const IntVec& w, const MaxEntOptions& options = {});

// The optimal-supersaturation program: maximise H(mu_q) over pair measures
// q on ({0,1}x{0,1})^n with both marginals equal to p, expectation
// sum_i q[i][(1,1)] v_i = w, and all cells in [kappa, 1-kappa]. Each
// coordinate has one free variable x_i = q[i][(1,1)] in the box
// [max(0, 2p_i - 1), p_i] (tightened by kappa); the dual is a smooth
// convex program in theta in R^D solved by Newton, with the per-coordinate
// stationarity condition (p_i - x_i)^2 = e^{theta.v_i} x_i (1 - 2p_i + x_i)
// solved in closed form as a quadratic with clamping.
enum class HmaxStatus { converged, empty, boundary, iteration_limit };

const char* to_string(HmaxStatus status);

struct HmaxSolution {
  PairMeasure measure;
  Vec dual;               // theta in R^D
  double hmax_bits = 0;   // 0 when Q is empty, by convention
  double residual = 0;
  double min_cell = 0;    // realised minimum cell probability
  HmaxStatus status = HmaxStatus::iteration_limit;
  int iterations = 0;
  int clamped = 0;  // coordinates pinned at the box boundary
};

struct HmaxOptions {
  double tol = 1e-9;  // scaled residual tolerance
  int max_iter = 300;
  double theta_cap = 60.0;
};

HmaxSolution solve_hmax(const ProductMeasure& p, const VectorArray& binary, const Vec& target,
                        double kappa = 0.0, const HmaxOptions& options = {});

}  // namespace vecint
