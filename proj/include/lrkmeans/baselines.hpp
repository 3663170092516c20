#pragma once

#include "lrkmeans/types.hpp"

#include <cstdint>

namespace lrkmeans {

enum class BaselineMethod { KMeansPP, SymNMF, Spectral };

struct BaselineConfig {
  BaselineMethod method = BaselineMethod::KMeansPP;
  int K = 0;
  int r = 0;  // SymNMF factor rank; 0 -> 2K
  int max_iter = 300;
  double tol = 1e-7;
  int restarts = 10;
  std::uint64_t seed = 0;
  int threads = 1;  // restart parallelism
};

struct KMeansResult {
  Labeling labels;
  Matrix centroids;  // p x K
  double objective = 0.0;  // sum_i min_k ||X_i - c_k||^2
  int iterations = 0;
  std::vector<double> objective_trace;  // per Lloyd iteration, best restart
};

struct SymNmfResult {
  Labeling labels;
  FactorMatrix U;
  double objective = 0.0;  // ||A + U U^T||_F^2 up to the constant ||A||_F^2
  int iterations = 0;
  std::vector<double> objective_trace;
};

struct SpectralResult {
  Labeling labels;
  Matrix embedding;  // n x K, orthonormal columns
  int rank_used = 0; // columns with non-negligible singular value
};

// K-means++ D^2 seeding followed by Lloyd iterations until the assignment
// fixpoint or max_iter; best of `restarts` by objective, ties broken by
// restart index. Empty clusters are repaired by reseeding at the point
// farthest from its centroid.
KMeansResult lloyd_kmeanspp(const DataMatrix& X, const BaselineConfig& cfg);

// D^2-weighted initial centroids only (no Lloyd refinement); used for the
// separation plug-in estimate. Returns a p x K matrix.
Matrix kmeanspp_centers(const DataMatrix& X, int K, std::uint64_t seed);

// Projected gradient descent on f(U) = ||A + U U^T||_F^2 over U >= 0, the
// relaxation that drops the trace and row-sum constraints. Gradient
// 4(A U + U (U^T U)) evaluated matrix-free; elementwise positive-part
// projection; backtracking step. Labels by Lloyd on the rows of U.
SymNmfResult symnmf_pgd(const DataMatrix& X, const BaselineConfig& cfg);

// Top-K right singular subspace of X by randomized subspace iteration
// (X^T X is applied, never formed), then Lloyd on the n x K embedding rows.
// If the numerical rank is below K the missing columns are zero-padded and
// a warning is printed.
SpectralResult spectral_cluster(const DataMatrix& X, const BaselineConfig& cfg);

}  // namespace lrkmeans
