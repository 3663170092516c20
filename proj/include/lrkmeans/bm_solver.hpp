#pragma once

#include "lrkmeans/gram.hpp"
#include "lrkmeans/types.hpp"

#include <functional>
#include <stdexcept>
#include <vector>

namespace lrkmeans {

// (V)+ vanished: the projection onto Omega is undefined. The solver reacts
// by reinitializing the iterate randomly (at most three times per solve).
class ProjectionDegenerate : public std::runtime_error {
 public:
  ProjectionDegenerate()
      : std::runtime_error("project_omega: positive part is identically zero") {}
};

// Solver gave up (degenerate projection after three reinitializations).
class SolverAbort : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Nearest point of Omega = {U >= 0, ||U||_F^2 = K}:
//   Pi(V) = sqrt(K) (V)+ / ||(V)+||_F.
// Nonnegativity is exact; the norm holds to rounding. Throws
// ProjectionDegenerate when (V)+ = 0.
FactorMatrix project_omega(const Matrix& V, int K);

// Augmented Lagrangian
//   L_beta(U, y) = <L I + A, U U^T> + <y, U U^T 1 - 1> + beta/2 ||U U^T 1 - 1||^2
// evaluated matrix-free as -||X U||_F^2 + L ||U||_F^2 + y^T res + beta/2 ||res||^2.
// Requires cfg.beta and cfg.L to be set.
double lagrangian_value(const SolverState& state, const GramOperator& A,
                        const SolverConfig& cfg);

// grad = (2A + 2L I + 1 ybar^T + ybar 1^T) U with ybar = y + beta (U U^T 1 - 1),
// assembled from A U and two rank-one updates in O(npr + nr). Uses
// state.y_bar, which must be current.
Matrix lagrangian_gradient(const SolverState& state, const GramOperator& A,
                           const SolverConfig& cfg);

struct PrimalResult {
  int inner_iters = 0;
  // L_beta value at the start and after each accepted step; nonincreasing
  // under the backtracking line search.
  std::vector<double> f_trace;
};

// Step 1: projected gradient descent on U at fixed y until
// ||U_{t+1} - U_t||_F <= tol_inner or max_inner steps. With cfg.alpha unset
// the step is found by backtracking (halving from alpha0, reset every
// iteration); with cfg.alpha set the step is fixed.
PrimalResult primal_descent(SolverState& state, const GramOperator& A,
                            const SolverConfig& cfg);

// Step 2: y <- y + beta (U U^T 1 - 1).
void dual_ascent(SolverState& state, const SolverConfig& cfg);

struct TraceRow {
  int outer_iter = 0;
  int inner_iters = 0;
  double objective = 0.0;  // <A, U U^T>
  double feas_inf = 0.0;   // ||U U^T 1 - 1||_inf
  double du_norm = 0.0;    // ||U_new - U||_F over the outer step
  double dy_norm = 0.0;    // ||y_new - y||_2
  double rel_z_err = std::numeric_limits<double>::quiet_NaN();
  double elapsed_ms = 0.0;  // since solve start
  double primal_ms = 0.0;   // spent inside this outer step's inner loop
};

struct SolveResult {
  FactorMatrix U;
  Vector y;
  Labeling labels;
  double objective = 0.0;
  double feas_eq = 0.0;  // ||U U^T 1 - 1||_inf at the returned U
  bool converged = false;
  int outer_iters = 0;
  std::vector<TraceRow> trace;
};

// Optional per-outer-iteration hook: receives the current factor and returns
// a value stored in TraceRow::rel_z_err (the harness plugs in the relative
// membership error against a known truth).
using RelErrFn = std::function<double(const Matrix& U)>;

// Full primal-dual loop (Algorithm: primal descent / dual ascent / stop when
// max{||U_new - U||_F, ||U_new U_new^T 1 - 1||_F} <= tol_outer). Unset
// hyperparameters are filled by set_defaults_from_data. Labels come from
// extract_labels on the converged factor.
SolveResult solve(const DataMatrix& X, const SolverConfig& cfg,
                  const RelErrFn& rel_err = nullptr);

// K-means++ seeded Lloyd on the rows of U (n points in R^r), 10 restarts,
// best within-cluster SSE kept. Deterministic per seed.
Labeling extract_labels(const FactorMatrix& U, int K, std::uint64_t seed);

// Fills any unset hyperparameter from the separation plug-in
// theta2 = min pairwise squared distance among K-means++ initial centroids:
//   L = n theta2 / (2K), beta = theta2 / K^3, alpha0 = 1 / (K^2 n theta2).
// Explicitly set values pass through unchanged. Duplicate centroids fall
// back to the mean pairwise squared distance.
SolverConfig set_defaults_from_data(const DataMatrix& X, const SolverConfig& cfg);

}  // namespace lrkmeans
