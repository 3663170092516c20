#pragma once

#include "lrkmeans/types.hpp"

#include <cstdint>

namespace lrkmeans {

// A drawn mixture instance together with its ground truth and the threshold
// quantities it was calibrated against.
struct GmmSample {
  DataMatrix data;
  Labeling truth;
  GmmSpec spec;
  double theta_min = 0.0;     // realized minimal center separation
  double theta_bar_sq = 0.0;  // sharp threshold for (n, p, K, sigma)
};

// Sharp squared-separation threshold for exact recovery:
//   4 sigma^2 (1 + sqrt(1 + K p / (n ln n))) ln n.
// Natural logarithm. Requires n >= 2.
double sharp_threshold(int n, int p, int K, double sigma);

// Centers mu_k = (theta_min / sqrt(2)) e_k on the scaled standard-basis
// simplex, so every pairwise distance is exactly theta_min. Requires p >= K.
std::vector<Vector> place_simplex_centers(int p, int K, double theta_min);

// Balanced spec with centers at gamma times the sharp threshold:
// Theta_min^2 = gamma * sharp_threshold(n, p, K, sigma). When K does not
// divide n the first n mod K clusters take one extra sample.
GmmSpec balanced_spec(int n, int p, int K, double sigma, double gamma);

// Draws X_i = mu_k + sigma * z, z ~ N(0, I_p), for i in cluster k. Columns
// are laid out block-contiguously and then shuffled by the seeded generator
// (truth carries the permuted labels); pass shuffle = false to keep the
// block layout. Bitwise reproducible per seed.
GmmSample sample(const GmmSpec& spec, std::uint64_t seed, bool shuffle = true);

}  // namespace lrkmeans
