#include "manprox/synthetic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "manprox/rng.hpp"

namespace manprox {

namespace {
constexpr int kClusters = 5;
constexpr int kPerCluster = 100;
constexpr int kAmbientDim = 10;
constexpr int kLatentDim = 5;

Eigen::MatrixXd gaussian_matrix(Eigen::Index rows, Eigen::Index cols,
                                std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = gauss(rng);
  return m;
}
}  // namespace

CircleDetail gen_circle_detail(std::uint64_t seed) {
  const double radius = 1.0;
  const double sigma = 0.3 * radius;
  const int n = kClusters * kPerCluster;

  CircleDetail out;
  out.centers.resize(kClusters, 2);
  for (int l = 1; l <= kClusters; ++l) {
    const double angle = 2.0 * std::numbers::pi * l / kClusters;
    out.centers.row(l - 1) << std::cos(angle), std::sin(angle);
  }

  auto rng_latent = seeded_rng(seed, 0x11);
  std::normal_distribution<double> gauss;
  out.latent.resize(n, 2);
  Eigen::VectorXi labels(n);
  for (int l = 0; l < kClusters; ++l) {
    for (int i = 0; i < kPerCluster; ++i) {
      const int row = l * kPerCluster + i;
      out.latent(row, 0) = out.centers(l, 0) + sigma * gauss(rng_latent);
      out.latent(row, 1) = out.centers(l, 1) + sigma * gauss(rng_latent);
      labels(row) = l;
    }
  }

  auto rng_proj = seeded_rng(seed, 0x12);
  const Eigen::MatrixXd proj = gaussian_matrix(kAmbientDim, 2, rng_proj);
  auto rng_noise = seeded_rng(seed, 0x13);
  Eigen::MatrixXd x = out.latent * proj.transpose();
  x += 0.3 * radius * gaussian_matrix(n, kAmbientDim, rng_noise);

  out.data.points = std::move(x);
  out.data.labels = std::move(labels);
  out.data.generator = "synthetic-circle";
  out.data.seed = seed;
  return out;
}

Dataset gen_circle(std::uint64_t seed) { return gen_circle_detail(seed).data; }

MixtureDetail gen_mixture_detail(std::uint64_t seed, double noise_scale) {
  const int n = kClusters * kPerCluster;

  // Heterogeneous row scales model cluster imbalance.
  Eigen::VectorXd row_scale(kClusters);
  for (int l = 0; l < kClusters; ++l) row_scale(l) = 1.0 + 0.2 * l;

  auto rng_basis = seeded_rng(seed, 0x21);
  MixtureDetail out;
  out.basis = gaussian_matrix(kClusters, kLatentDim, rng_basis);
  for (int l = 0; l < kClusters; ++l) out.basis.row(l) *= row_scale(l);

  const double sigma = noise_scale * out.basis.rowwise().norm().maxCoeff();

  auto rng_labels = seeded_rng(seed, 0x22);
  std::uniform_int_distribution<int> pick(0, kClusters - 1);
  Eigen::VectorXi labels(n);
  for (int i = 0; i < n; ++i) labels(i) = pick(rng_labels);

  auto rng_noise = seeded_rng(seed, 0x23);
  Eigen::MatrixXd x = sigma * gaussian_matrix(n, kAmbientDim, rng_noise);
  for (int i = 0; i < n; ++i)
    x.row(i).head(kLatentDim) += out.basis.row(labels(i));

  out.data.points = std::move(x);
  out.data.labels = std::move(labels);
  out.data.generator = "synthetic-mixture";
  out.data.seed = seed;
  return out;
}

Dataset gen_mixture(std::uint64_t seed) { return gen_mixture_detail(seed).data; }

Eigen::MatrixXd gen_spca_matrix(Eigen::Index n1, Eigen::Index n, std::uint64_t seed) {
  if (n1 <= 0 || n <= 0) throw std::invalid_argument("gen_spca_matrix: positive dims");
  auto rng = seeded_rng(seed, 0x31);
  Eigen::MatrixXd a = gaussian_matrix(n1, n, rng);
  a.rowwise() -= a.colwise().mean();
  for (Eigen::Index j = 0; j < n; ++j) {
    const double nrm = a.col(j).norm();
    if (nrm > 0) a.col(j) /= nrm;
  }
  return a;
}

}  // namespace manprox
