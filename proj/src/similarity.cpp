#include "manprox/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace manprox {

namespace {
Eigen::MatrixXd pairwise_sq_dist(const Eigen::MatrixXd& x) {
  const Eigen::VectorXd sq = x.rowwise().squaredNorm();
  Eigen::MatrixXd d2 = sq.replicate(1, x.rows()) + sq.transpose().replicate(x.rows(), 1) -
                       2.0 * (x * x.transpose());
  return d2.cwiseMax(0.0);
}
}  // namespace

std::vector<double> median_bandwidths(const Eigen::MatrixXd& x) {
  const Eigen::Index n = x.rows();
  if (n < 2) throw std::invalid_argument("median_bandwidths: need at least two samples");
  const Eigen::MatrixXd d2 = pairwise_sq_dist(x);
  std::vector<double> dist;
  dist.reserve(std::size_t(n) * (n - 1) / 2);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) dist.push_back(std::sqrt(d2(i, j)));
  auto mid = dist.begin() + dist.size() / 2;
  std::nth_element(dist.begin(), mid, dist.end());
  const double med = *mid;
  return {0.25 * med, 0.5 * med, med, 2.0 * med, 4.0 * med};
}

Eigen::MatrixXd gaussian_similarity(const Eigen::MatrixXd& x,
                                    const std::vector<double>& bandwidths) {
  const std::vector<double> bw = bandwidths.empty() ? median_bandwidths(x) : bandwidths;
  const Eigen::Index n = x.rows();
  const Eigen::MatrixXd d2 = pairwise_sq_dist(x);
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(n, n);
  for (const double sigma : bw) {
    if (sigma <= 0) throw std::invalid_argument("gaussian_similarity: bandwidth <= 0");
    s += (-d2 / (2.0 * sigma * sigma)).array().exp().matrix();
  }
  s /= double(bw.size());
  s.diagonal().setZero();
  return 0.5 * (s + s.transpose());
}

Eigen::MatrixXd normalized_laplacian(const Eigen::MatrixXd& s_hat) {
  const Eigen::Index n = s_hat.rows();
  if (s_hat.cols() != n) throw std::invalid_argument("normalized_laplacian: square input");
  if ((s_hat - s_hat.transpose()).norm() > 1e-10 * (1.0 + s_hat.norm()))
    throw std::invalid_argument("normalized_laplacian: similarity must be symmetric");
  if (s_hat.minCoeff() < 0)
    throw std::invalid_argument("normalized_laplacian: similarity must be nonnegative");
  const Eigen::VectorXd deg = s_hat.rowwise().sum();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!(deg(i) > 0)) {
      std::ostringstream msg;
      msg << "normalized_laplacian: degenerate node " << i << " with row sum " << deg(i);
      throw std::invalid_argument(msg.str());
    }
  }
  const Eigen::VectorXd inv_sqrt = deg.array().rsqrt();
  Eigen::MatrixXd s = -(inv_sqrt.asDiagonal() * s_hat * inv_sqrt.asDiagonal());
  s.diagonal().array() += 1.0;
  return 0.5 * (s + s.transpose());
}

Eigen::MatrixXd similarity_laplacian(const Eigen::MatrixXd& x,
                                     const std::vector<double>& bandwidths) {
  return normalized_laplacian(gaussian_similarity(x, bandwidths));
}

}  // namespace manprox
