#pragma once

#include <Eigen/Dense>
#include <vector>

namespace manprox {

// Median pairwise distance scaled by {1/4, 1/2, 1, 2, 4}.
std::vector<double> median_bandwidths(const Eigen::MatrixXd& x);

// Zero-diagonal Gaussian-kernel similarity, averaged over the given
// bandwidths (median rule when empty).
Eigen::MatrixXd gaussian_similarity(const Eigen::MatrixXd& x,
                                    const std::vector<double>& bandwidths = {});

// S = I - D^{-1/2} S^ D^{-1/2} for a nonnegative symmetric similarity with
// positive row sums; a nonpositive row sum raises a degenerate-node error.
Eigen::MatrixXd normalized_laplacian(const Eigen::MatrixXd& s_hat);

// gaussian_similarity then normalized_laplacian.
Eigen::MatrixXd similarity_laplacian(const Eigen::MatrixXd& x,
                                     const std::vector<double>& bandwidths = {});

}  // namespace manprox
