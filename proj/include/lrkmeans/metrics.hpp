#pragma once

#include "lrkmeans/types.hpp"

namespace lrkmeans {

struct EvalReport {
  double misclust = 0.0;   // in [0, 1]
  double rel_z_err = 0.0;  // ||U U^T - Z*||_F / ||Z*||_F
  double feas_eq = 0.0;    // ||U U^T 1 - 1||_inf
  double objective = 0.0;  // <A, U U^T>
  double wall_ms = 0.0;
};

// Fraction of samples misassigned under the best bijection between estimated
// and true labels: (1/n) min_sigma #{i : sigma(est_i) != truth_i}. The
// optimal matching is found by a Hungarian assignment on the confusion
// matrix (O(K^3)); an estimate may use fewer labels than the truth.
// Throws std::invalid_argument on length mismatch or est using more labels.
double misclustering_error(const Labeling& est, const Labeling& truth);

// ||U U^T - Z*||_F / ||Z*||_F against the block-constant ground-truth
// membership matrix, computed without materializing any n x n matrix via
//   ||U U^T - Z*||_F^2 = ||U^T U||_F^2 - 2 sum_k ||U^T 1_{G_k}||^2 / n_k + K.
double relative_membership_error(const FactorMatrix& U, const Labeling& truth);

// Minimum-cost assignment on a square cost matrix; returns the column
// matched to each row. Exposed for testing against the factorial oracle.
std::vector<int> hungarian_assignment(const Matrix& cost);

}  // namespace lrkmeans
