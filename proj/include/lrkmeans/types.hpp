#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lrkmeans {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Sample matrix X, one column per sample: p features x n samples.
struct DataMatrix {
  Matrix values;

  DataMatrix() = default;
  // Validates that the matrix is nonempty and every entry is finite.
  explicit DataMatrix(Matrix m);

  int p() const { return static_cast<int>(values.rows()); }
  int n() const { return static_cast<int>(values.cols()); }
};

// Thin n x r factor U of the membership matrix Z = U U^T.
//
// `feasible` marks instances known to lie in Omega = {U >= 0, ||U||_F^2 = K};
// raw iterates between a gradient step and the projection carry
// feasible = false.
struct FactorMatrix {
  Matrix values;
  bool feasible = false;

  FactorMatrix() = default;
  explicit FactorMatrix(Matrix m, bool feasible_ = false)
      : values(std::move(m)), feasible(feasible_) {}

  int n() const { return static_cast<int>(values.rows()); }
  int r() const { return static_cast<int>(values.cols()); }
};

// Cluster assignment of each sample; labels are 0-based and every cluster is
// nonempty (degenerate partitions would make B = diag(1/n_k) undefined).
struct Labeling {
  std::vector<int> labels;
  std::vector<int> sizes;  // n_k, derived at construction

  Labeling() = default;
  Labeling(std::vector<int> labels_, int num_clusters);

  int n() const { return static_cast<int>(labels.size()); }
  int num_clusters() const { return static_cast<int>(sizes.size()); }
};

enum class InitMode { RandomProjected, KMeansPlusPlus, Provided };

// Hyperparameters and controls for the primal-dual solver. beta, L and the
// line-search starting step default to plug-in values derived from the data
// (see set_defaults_from_data); set them explicitly to override. `alpha`
// fixes the step size and disables the line search.
struct SolverConfig {
  int K = 0;
  int r = 0;  // 0 -> 2K
  std::optional<double> beta;
  std::optional<double> L;
  std::optional<double> alpha;   // fixed step; unset -> backtracking
  std::optional<double> alpha0;  // line-search starting step
  int max_outer = 100;
  int max_inner = 100;
  double tol_inner = 1e-7;
  double tol_outer = 1e-6;
  std::uint64_t seed = 0;
  InitMode init = InitMode::RandomProjected;
  std::optional<Matrix> U0;  // used when init == Provided

  int rank() const { return r > 0 ? r : 2 * K; }
};

// Throws std::invalid_argument when the (resolved) configuration violates
// beta > 0, L > 0, r >= K or max_inner >= 1.
void validate_config(const SolverConfig& cfg, int n);

// Live state of the primal-dual iteration.
struct SolverState {
  FactorMatrix U;
  Vector y;
  Vector residual;  // U (U^T 1) - 1
  Vector y_bar;     // y + beta * residual
  int outer_iter = 0;
  int inner_iter = 0;

  static SolverState make(FactorMatrix U, Vector y, double beta);
  // Recomputes residual from U and y_bar from (y, beta); call after any
  // change to U, y or beta.
  void refresh(double beta);
};

// Gaussian mixture generative parameters. Centers must be equidistant:
// every pairwise distance equals the minimal separation within 1e-9.
struct GmmSpec {
  int n = 0;
  int p = 0;
  int K = 0;
  double sigma = 1.0;
  double gamma = 1.0;  // Theta_min^2 = gamma * sharp threshold
  std::vector<int> sizes;
  std::vector<Vector> centers;

  // Throws std::invalid_argument on violation (p < K, size mismatch,
  // non-equidistant centers).
  void validate() const;
  // Minimal pairwise center distance; 0 when K == 1.
  double theta_min() const;
};

struct FactorViolation {
  enum class Kind { Negativity, Norm };
  Kind kind;
  int row = -1;
  int col = -1;
  double value = 0.0;
};

struct FactorReport {
  std::vector<FactorViolation> violations;
  double norm_sq = 0.0;
  bool ok() const { return violations.empty(); }
};

// Checks U against Omega: entrywise nonnegativity and ||U||_F^2 = K within
// 1e-10. Reports every negative entry and the norm deviation.
FactorReport validate_factor(const FactorMatrix& U, int K);

// Ground-truth factor U*: column s carries 1/sqrt(n_s) on the rows of
// cluster s, zero elsewhere; columns K..r-1 are zero. Requires r >= K.
FactorMatrix ideal_factor(const Labeling& truth, int r);

}  // namespace lrkmeans
