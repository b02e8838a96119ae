#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>

namespace manprox {

struct Dataset {
  Eigen::MatrixXd points;  // N x p, samples by features
  Eigen::VectorXi labels;  // ground truth in [0, C); empty when unknown
  std::string generator;
  std::uint64_t seed = 0;
};

// Five clusters on the unit circle in a latent plane, Gaussian spread
// 0.3 around each center, lifted to p = 10 dimensions by a random
// Gaussian projection plus additive 0.3-scale noise. N = 500.
Dataset gen_circle(std::uint64_t seed);

struct CircleDetail {
  Eigen::MatrixXd centers;  // C x 2
  Eigen::MatrixXd latent;   // N x 2, before projection
  Dataset data;
};
CircleDetail gen_circle_detail(std::uint64_t seed);

// Five-cluster linear mixture: X = Z B + W with B = [B', 0] in R^{5 x 10},
// one-hot Z, uniform labels, and noise scale 0.2 x (max row norm of B').
Dataset gen_mixture(std::uint64_t seed);

struct MixtureDetail {
  Eigen::MatrixXd basis;  // B', C x d
  Dataset data;
};
MixtureDetail gen_mixture_detail(std::uint64_t seed, double noise_scale = 0.2);

// Standard Gaussian matrix with columns shifted to mean zero and scaled
// to unit Euclidean norm.
Eigen::MatrixXd gen_spca_matrix(Eigen::Index n1, Eigen::Index n, std::uint64_t seed);

}  // namespace manprox
