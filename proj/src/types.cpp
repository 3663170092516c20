#include "lrkmeans/types.hpp"

#include <cmath>
#include <stdexcept>

namespace lrkmeans {

DataMatrix::DataMatrix(Matrix m) : values(std::move(m)) {
  if (values.rows() < 1 || values.cols() < 1) {
    throw std::invalid_argument("DataMatrix: need p >= 1 and n >= 1");
  }
  if (!values.allFinite()) {
    throw std::invalid_argument("DataMatrix: non-finite entry");
  }
}

Labeling::Labeling(std::vector<int> labels_, int num_clusters)
    : labels(std::move(labels_)) {
  if (num_clusters < 1) {
    throw std::invalid_argument("Labeling: need at least one cluster");
  }
  sizes.assign(num_clusters, 0);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const int k = labels[i];
    if (k < 0 || k >= num_clusters) {
      throw std::invalid_argument("Labeling: label out of range at index " +
                                  std::to_string(i));
    }
    ++sizes[k];
  }
  for (int k = 0; k < num_clusters; ++k) {
    if (sizes[k] == 0) {
      throw std::invalid_argument("Labeling: cluster " + std::to_string(k) +
                                  " is empty");
    }
  }
}

void validate_config(const SolverConfig& cfg, int n) {
  if (cfg.K < 1 || cfg.K > n) {
    throw std::invalid_argument("SolverConfig: need 1 <= K <= n");
  }
  if (cfg.rank() < cfg.K) {
    throw std::invalid_argument("SolverConfig: need r >= K");
  }
  if (cfg.max_inner < 1) {
    throw std::invalid_argument("SolverConfig: need max_inner >= 1");
  }
  if (cfg.beta && *cfg.beta <= 0.0) {
    throw std::invalid_argument("SolverConfig: need beta > 0");
  }
  if (cfg.L && *cfg.L <= 0.0) {
    throw std::invalid_argument("SolverConfig: need L > 0");
  }
  if (cfg.init == InitMode::Provided && !cfg.U0) {
    throw std::invalid_argument("SolverConfig: init Provided without U0");
  }
}

SolverState SolverState::make(FactorMatrix U, Vector y, double beta) {
  SolverState s;
  s.U = std::move(U);
  s.y = std::move(y);
  s.refresh(beta);
  return s;
}

void SolverState::refresh(double beta) {
  const auto& V = U.values;
  // V (V^T 1) - 1, never V V^T
  residual.noalias() = V * (V.transpose() * Vector::Ones(V.rows()));
  residual.array() -= 1.0;
  y_bar = y + beta * residual;
}

void GmmSpec::validate() const {
  if (n < 1 || p < 1 || K < 1) {
    throw std::invalid_argument("GmmSpec: need n, p, K >= 1");
  }
  if (p < K) {
    throw std::invalid_argument("GmmSpec: simplex placement needs p >= K");
  }
  if (static_cast<int>(sizes.size()) != K ||
      static_cast<int>(centers.size()) != K) {
    throw std::invalid_argument("GmmSpec: need K sizes and K centers");
  }
  int total = 0;
  for (int nk : sizes) {
    if (nk < 1) throw std::invalid_argument("GmmSpec: empty cluster size");
    total += nk;
  }
  if (total != n) {
    throw std::invalid_argument("GmmSpec: sizes must sum to n");
  }
  for (const auto& mu : centers) {
    if (mu.size() != p) {
      throw std::invalid_argument("GmmSpec: center dimension != p");
    }
  }
  if (K >= 2) {
    const double t = theta_min();
    for (int j = 0; j < K; ++j) {
      for (int k = j + 1; k < K; ++k) {
        const double d = (centers[j] - centers[k]).norm();
        if (std::abs(d - t) > 1e-9) {
          throw std::invalid_argument(
              "GmmSpec: centers are not equidistant within 1e-9");
        }
      }
    }
  }
}

double GmmSpec::theta_min() const {
  double best = 0.0;
  bool first = true;
  for (std::size_t j = 0; j < centers.size(); ++j) {
    for (std::size_t k = j + 1; k < centers.size(); ++k) {
      const double d = (centers[j] - centers[k]).norm();
      if (first || d < best) {
        best = d;
        first = false;
      }
    }
  }
  return best;
}

FactorReport validate_factor(const FactorMatrix& U, int K) {
  FactorReport report;
  const auto& V = U.values;
  for (int j = 0; j < V.cols(); ++j) {
    for (int i = 0; i < V.rows(); ++i) {
      if (V(i, j) < 0.0) {
        report.violations.push_back(
            {FactorViolation::Kind::Negativity, i, j, V(i, j)});
      }
    }
  }
  report.norm_sq = V.squaredNorm();
  if (std::abs(report.norm_sq - static_cast<double>(K)) > 1e-10) {
    report.violations.push_back(
        {FactorViolation::Kind::Norm, -1, -1, report.norm_sq});
  }
  return report;
}

FactorMatrix ideal_factor(const Labeling& truth, int r) {
  const int K = truth.num_clusters();
  if (r < K) {
    throw std::invalid_argument("ideal_factor: need r >= K");
  }
  Matrix U = Matrix::Zero(truth.n(), r);
  for (int i = 0; i < truth.n(); ++i) {
    const int s = truth.labels[i];
    U(i, s) = 1.0 / std::sqrt(static_cast<double>(truth.sizes[s]));
  }
  return FactorMatrix(std::move(U), /*feasible=*/true);
}

}  // namespace lrkmeans
