#include "lrkmeans/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace lrkmeans {

std::vector<int> hungarian_assignment(const Matrix& cost) {
  const int n = static_cast<int>(cost.rows());
  if (cost.cols() != n) {
    throw std::invalid_argument("hungarian_assignment: cost must be square");
  }
  const double inf = std::numeric_limits<double>::infinity();
  // Standard potentials formulation with 1-based sentinels.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> match(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    match[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = match[j0];
      int j1 = -1;
      double delta = inf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const int j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<int> row_to_col(n, -1);
  for (int j = 1; j <= n; ++j) {
    if (match[j] != 0) row_to_col[match[j] - 1] = j - 1;
  }
  return row_to_col;
}

double misclustering_error(const Labeling& est, const Labeling& truth) {
  if (est.n() != truth.n()) {
    throw std::invalid_argument("misclustering_error: length mismatch");
  }
  const int ke = est.num_clusters();
  const int kt = truth.num_clusters();
  if (ke > kt) {
    throw std::invalid_argument(
        "misclustering_error: estimate uses more labels than the truth");
  }
  const int n = est.n();
  const int m = std::max(ke, kt);
  Matrix confusion = Matrix::Zero(m, m);
  for (int i = 0; i < n; ++i) {
    confusion(est.labels[i], truth.labels[i]) += 1.0;
  }
  const auto assign = hungarian_assignment(-confusion);
  double agreement = 0.0;
  for (int e = 0; e < m; ++e) {
    agreement += confusion(e, assign[e]);
  }
  return (static_cast<double>(n) - agreement) / static_cast<double>(n);
}

double relative_membership_error(const FactorMatrix& U,
                                 const Labeling& truth) {
  const auto& V = U.values;
  if (V.rows() != truth.n()) {
    throw std::invalid_argument("relative_membership_error: row count != n");
  }
  const int K = truth.num_clusters();
  const int r = static_cast<int>(V.cols());

  // ||U^T U||_F^2 costs O(n r^2)
  const Matrix gram = V.transpose() * V;
  const double a = gram.squaredNorm();

  // sum_k ||U^T 1_{G_k}||^2 / n_k = <U U^T, Z*>
  Matrix cluster_sums = Matrix::Zero(K, r);
  for (int i = 0; i < truth.n(); ++i) {
    cluster_sums.row(truth.labels[i]) += V.row(i);
  }
  double b = 0.0;
  for (int k = 0; k < K; ++k) {
    b += cluster_sums.row(k).squaredNorm() / truth.sizes[k];
  }

  const double dist_sq = std::max(0.0, a - 2.0 * b + static_cast<double>(K));
  return std::sqrt(dist_sq) / std::sqrt(static_cast<double>(K));
}

}  // namespace lrkmeans
