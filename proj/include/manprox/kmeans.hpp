#pragma once

#include <Eigen/Dense>
#include <cstdint>

namespace manprox {

struct KmeansResult {
  Eigen::VectorXi labels;   // in [0, k)
  Eigen::MatrixXd centers;  // k x p
  double wcss = 0.0;        // within-cluster sum of squares
};

// Seeded k-means++ initialization, Lloyd iterations until assignments are
// fixed (capped), best of `restarts` runs by WCSS. Restart i draws from
// the (seed, i) substream, so a larger restart budget extends the same
// stream instead of reshuffling it.
KmeansResult kmeans(const Eigen::MatrixXd& points, int k, int restarts,
                    std::uint64_t seed, int max_iterations = 300);

}  // namespace manprox
