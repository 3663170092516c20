#include "lrkmeans/gmm.hpp"

#include "lrkmeans/rng.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace lrkmeans {

double sharp_threshold(int n, int p, int K, double sigma) {
  if (n < 2) {
    throw std::invalid_argument("sharp_threshold: need n >= 2");
  }
  if (p < 1 || K < 1 || sigma < 0.0) {
    throw std::invalid_argument("sharp_threshold: need p, K >= 1 and sigma >= 0");
  }
  const double logn = std::log(static_cast<double>(n));
  const double ratio = static_cast<double>(K) * p / (n * logn);
  return 4.0 * sigma * sigma * (1.0 + std::sqrt(1.0 + ratio)) * logn;
}

std::vector<Vector> place_simplex_centers(int p, int K, double theta_min) {
  if (p < K) {
    throw std::invalid_argument("place_simplex_centers: need p >= K");
  }
  const double scale = theta_min / std::sqrt(2.0);
  std::vector<Vector> centers(K, Vector::Zero(p));
  for (int k = 0; k < K; ++k) {
    centers[k](k) = scale;
  }
  return centers;
}

GmmSpec balanced_spec(int n, int p, int K, double sigma, double gamma) {
  GmmSpec spec;
  spec.n = n;
  spec.p = p;
  spec.K = K;
  spec.sigma = sigma;
  spec.gamma = gamma;
  spec.sizes.assign(K, n / K);
  for (int k = 0; k < n % K; ++k) {
    ++spec.sizes[k];
  }
  const double theta = std::sqrt(gamma * sharp_threshold(n, p, K, sigma));
  spec.centers = place_simplex_centers(p, K, theta);
  spec.validate();
  return spec;
}

GmmSample sample(const GmmSpec& spec, std::uint64_t seed, bool shuffle) {
  spec.validate();
  Rng rng(seed);

  Matrix X(spec.p, spec.n);
  std::vector<int> labels(spec.n);
  int col = 0;
  for (int k = 0; k < spec.K; ++k) {
    for (int j = 0; j < spec.sizes[k]; ++j, ++col) {
      labels[col] = k;
      for (int d = 0; d < spec.p; ++d) {
        X(d, col) = spec.centers[k](d) + spec.sigma * rng.normal();
      }
    }
  }

  if (shuffle) {
    std::vector<int> perm(spec.n);
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    Matrix Xs(spec.p, spec.n);
    std::vector<int> ls(spec.n);
    for (int i = 0; i < spec.n; ++i) {
      Xs.col(i) = X.col(perm[i]);
      ls[i] = labels[perm[i]];
    }
    X = std::move(Xs);
    labels = std::move(ls);
  }

  GmmSample out;
  out.data = DataMatrix(std::move(X));
  out.truth = Labeling(std::move(labels), spec.K);
  out.spec = spec;
  out.theta_bar_sq = sharp_threshold(spec.n, spec.p, spec.K, spec.sigma);
  out.theta_min = spec.K >= 2 ? spec.theta_min()
                              : std::sqrt(spec.gamma * out.theta_bar_sq);
  return out;
}

}  // namespace lrkmeans
