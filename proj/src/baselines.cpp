#include "lrkmeans/baselines.hpp"

#include "lrkmeans/detail/parallel.hpp"
#include "lrkmeans/gram.hpp"
#include "lrkmeans/rng.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include <cmath>
#include <iostream>
#include <limits>
#include <stdexcept>

namespace lrkmeans {

namespace {

// Nearest-centroid assignment; returns the objective and writes labels.
double assign_nearest(const Matrix& X, const Matrix& centers,
                      std::vector<int>& labels, std::vector<double>& dist_sq) {
  const int n = static_cast<int>(X.cols());
  const int K = static_cast<int>(centers.cols());
  double objective = 0.0;
  for (int i = 0; i < n; ++i) {
    int best = 0;
    double best_d = (X.col(i) - centers.col(0)).squaredNorm();
    for (int k = 1; k < K; ++k) {
      const double d = (X.col(i) - centers.col(k)).squaredNorm();
      if (d < best_d) {
        best_d = d;
        best = k;
      }
    }
    labels[i] = best;
    dist_sq[i] = best_d;
    objective += best_d;
  }
  return objective;
}

// Moves every empty cluster's centroid onto the in-data point farthest from
// its current centroid and forces that point's label, so no cluster stays
// empty even on duplicate-heavy data.
void repair_empty_clusters(const Matrix& X, Matrix& centers,
                           std::vector<int>& labels,
                           std::vector<double>& dist_sq) {
  const int K = static_cast<int>(centers.cols());
  const int n = static_cast<int>(X.cols());
  std::vector<int> counts(K, 0);
  for (int l : labels) ++counts[l];
  for (int k = 0; k < K; ++k) {
    if (counts[k] > 0) continue;
    int far_i = -1;
    double far_d = -1.0;
    for (int i = 0; i < n; ++i) {
      if (counts[labels[i]] <= 1) continue;  // do not empty another cluster
      if (dist_sq[i] > far_d) {
        far_d = dist_sq[i];
        far_i = i;
      }
    }
    if (far_i < 0) throw std::runtime_error("kmeans: cannot repair empty cluster");
    centers.col(k) = X.col(far_i);
    --counts[labels[far_i]];
    labels[far_i] = k;
    counts[k] = 1;
    dist_sq[far_i] = 0.0;
  }
}

KMeansResult lloyd_single(const DataMatrix& data, int K, int max_iter,
                          std::uint64_t seed) {
  const Matrix& X = data.values;
  const int n = data.n();
  const int p = data.p();

  KMeansResult res;
  Matrix centers = kmeanspp_centers(data, K, seed);
  std::vector<int> labels(n, 0);
  std::vector<double> dist_sq(n, 0.0);

  double objective = assign_nearest(X, centers, labels, dist_sq);
  repair_empty_clusters(X, centers, labels, dist_sq);
  res.objective_trace.push_back(objective);

  std::vector<int> prev = labels;
  int iter = 0;
  for (; iter < max_iter; ++iter) {
    // means update
    centers.setZero(p, K);
    std::vector<int> counts(K, 0);
    for (int i = 0; i < n; ++i) {
      centers.col(labels[i]) += X.col(i);
      ++counts[labels[i]];
    }
    for (int k = 0; k < K; ++k) {
      centers.col(k) /= static_cast<double>(counts[k]);
    }
    objective = assign_nearest(X, centers, labels, dist_sq);
    repair_empty_clusters(X, centers, labels, dist_sq);
    res.objective_trace.push_back(objective);
    if (labels == prev) break;
    prev = labels;
  }

  res.labels = Labeling(std::move(labels), K);
  res.centroids = std::move(centers);
  res.objective = objective;
  res.iterations = iter;
  return res;
}

}  // namespace

Matrix kmeanspp_centers(const DataMatrix& data, int K, std::uint64_t seed) {
  const Matrix& X = data.values;
  const int n = data.n();
  if (K < 1 || K > n) {
    throw std::invalid_argument("kmeanspp_centers: need 1 <= K <= n");
  }
  Rng rng(seed);
  Matrix centers(data.p(), K);
  std::vector<double> mindist(n, std::numeric_limits<double>::infinity());

  int first = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n)));
  centers.col(0) = X.col(first);
  for (int k = 1; k < K; ++k) {
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
      const double d = (X.col(i) - centers.col(k - 1)).squaredNorm();
      if (d < mindist[i]) mindist[i] = d;
      total += mindist[i];
    }
    int pick;
    if (total <= 0.0) {
      pick = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n)));
    } else {
      // D^2-weighted draw via the cumulative distribution
      const double target = rng.uniform01() * total;
      double acc = 0.0;
      pick = n - 1;
      for (int i = 0; i < n; ++i) {
        acc += mindist[i];
        if (acc >= target) {
          pick = i;
          break;
        }
      }
    }
    centers.col(k) = X.col(pick);
  }
  return centers;
}

KMeansResult lloyd_kmeanspp(const DataMatrix& X, const BaselineConfig& cfg) {
  if (cfg.K < 1 || cfg.K > X.n()) {
    throw std::invalid_argument("lloyd_kmeanspp: need 1 <= K <= n");
  }
  if (cfg.restarts < 1) {
    throw std::invalid_argument("lloyd_kmeanspp: need restarts >= 1");
  }
  std::vector<KMeansResult> runs(cfg.restarts);
  detail::parallel_for(static_cast<std::size_t>(cfg.restarts), cfg.threads,
                       [&](std::size_t i) {
                         runs[i] = lloyd_single(X, cfg.K, cfg.max_iter,
                                                cfg.seed + i);
                       });
  std::size_t best = 0;
  for (std::size_t i = 1; i < runs.size(); ++i) {
    if (runs[i].objective < runs[best].objective) best = i;
  }
  return std::move(runs[best]);
}

SymNmfResult symnmf_pgd(const DataMatrix& X, const BaselineConfig& cfg) {
  const int n = X.n();
  const int K = cfg.K;
  const int r = cfg.r > 0 ? cfg.r : 2 * K;
  if (r < K) throw std::invalid_argument("symnmf_pgd: need r >= K");
  GramOperator gram(X);
  Rng rng(cfg.seed);

  // same random start as the BM solver: uniform(0,1) scaled onto the sphere
  Matrix U(n, r);
  for (int j = 0; j < r; ++j) {
    for (int i = 0; i < n; ++i) U(i, j) = rng.uniform01();
  }
  if (U.norm() == 0.0) {
    // degenerate all-zero start, jitter
    for (int j = 0; j < r; ++j) {
      for (int i = 0; i < n; ++i) U(i, j) = 0.5 + 0.5 * rng.uniform01();
    }
  }
  U *= std::sqrt(static_cast<double>(K)) / U.norm();

  // f(U) = ||A + U U^T||_F^2 up to the constant ||A||_F^2:
  //   g(U) = -2 ||X U||_F^2 + ||U^T U||_F^2
  auto g_of = [&](const Matrix& V) {
    return 2.0 * gram.quadratic_form(V) + (V.transpose() * V).squaredNorm();
  };

  SymNmfResult res;
  Matrix xu, au, grad, cand;
  double g_cur = g_of(U);
  res.objective_trace.push_back(g_cur);
  double alpha = 1.0 / (4.0 * (-gram.quadratic_form(U) / K + 3.0 * K));
  int iter = 0;
  for (; iter < cfg.max_iter; ++iter) {
    gram.apply_into(U, xu, au);
    grad.noalias() = U * (U.transpose() * U);
    grad += au;
    grad *= 4.0;

    alpha *= 2.0;  // allow the accepted step to grow back
    bool moved = false;
    for (int half = 0; half < 60; ++half) {
      cand = (U - alpha * grad).cwiseMax(0.0);
      const double g_new = g_of(cand);
      if (g_new < g_cur) {
        const double delta = (cand - U).norm();
        U.swap(cand);
        g_cur = g_new;
        res.objective_trace.push_back(g_cur);
        moved = true;
        if (delta <= cfg.tol) iter = cfg.max_iter;  // converged
        break;
      }
      alpha *= 0.5;
    }
    if (!moved) break;  // stationary within line-search resolution
  }

  const Matrix xxt = X.values * X.values.transpose();  // p x p
  res.objective = xxt.squaredNorm() + g_cur;
  res.iterations = static_cast<int>(res.objective_trace.size()) - 1;

  // rows of U are the latent positions; cluster them
  DataMatrix rows(Matrix(U.transpose()));
  BaselineConfig lloyd_cfg;
  lloyd_cfg.K = K;
  lloyd_cfg.restarts = 10;
  lloyd_cfg.max_iter = 100;
  lloyd_cfg.seed = cfg.seed + 1;
  res.labels = lloyd_kmeanspp(rows, lloyd_cfg).labels;
  res.U = FactorMatrix(std::move(U));
  return res;
}

SpectralResult spectral_cluster(const DataMatrix& X, const BaselineConfig& cfg) {
  const int n = X.n();
  const int K = cfg.K;
  if (K < 1 || K > n) {
    throw std::invalid_argument("spectral_cluster: need 1 <= K <= n");
  }
  Rng rng(cfg.seed);

  // subspace iteration on X^T X, applied as X^T (X Q)
  Matrix Q(n, K);
  for (int j = 0; j < K; ++j) {
    for (int i = 0; i < n; ++i) Q(i, j) = rng.normal();
  }
  Q = Eigen::HouseholderQR<Matrix>(Q).householderQ() * Matrix::Identity(n, K);

  Matrix Y, prev;
  for (int it = 0; it < 100; ++it) {
    Y.noalias() = X.values.transpose() * (X.values * Q);
    prev = Q;
    Q = Eigen::HouseholderQR<Matrix>(Y).householderQ() * Matrix::Identity(n, K);
    // subspace distance between consecutive iterates
    const double drift =
        (Q - prev * (prev.transpose() * Q)).norm();
    if (drift <= 1e-12) break;
  }

  // Rayleigh-Ritz rotation orders columns by singular value
  const Matrix xq = X.values * Q;
  Eigen::SelfAdjointEigenSolver<Matrix> eig(xq.transpose() * xq);
  Matrix rotated = Q * eig.eigenvectors();
  Vector evals = eig.eigenvalues();  // ascending

  Matrix embedding(n, K);
  int rank_used = 0;
  const double cutoff = 1e-12 * std::max(evals(K - 1), 0.0);
  for (int j = 0; j < K; ++j) {
    const int src = K - 1 - j;  // descending order
    if (evals(src) > cutoff && evals(src) > 0.0) {
      embedding.col(j) = rotated.col(src);
      ++rank_used;
    } else {
      embedding.col(j).setZero();
    }
  }
  if (rank_used < K) {
    std::cerr << "spectral_cluster: numerical rank " << rank_used << " < K="
              << K << ", padding embedding with zero columns\n";
  }

  DataMatrix rows(Matrix(embedding.transpose()));
  BaselineConfig lloyd_cfg;
  lloyd_cfg.K = K;
  lloyd_cfg.restarts = cfg.restarts;
  lloyd_cfg.max_iter = cfg.max_iter;
  lloyd_cfg.seed = cfg.seed + 1;
  lloyd_cfg.threads = cfg.threads;

  SpectralResult res;
  res.labels = lloyd_kmeanspp(rows, lloyd_cfg).labels;
  res.embedding = std::move(embedding);
  res.rank_used = rank_used;
  return res;
}

}  // namespace lrkmeans
