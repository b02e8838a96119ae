#include "manprox/kmeans.hpp"

#include <limits>
#include <random>
#include <stdexcept>

#include "manprox/rng.hpp"

namespace manprox {

namespace {

Eigen::MatrixXd kmeanspp_init(const Eigen::MatrixXd& x, int k, std::mt19937_64& rng) {
  const Eigen::Index n = x.rows();
  Eigen::MatrixXd centers(k, x.cols());
  std::uniform_int_distribution<Eigen::Index> first(0, n - 1);
  centers.row(0) = x.row(first(rng));
  Eigen::VectorXd d2 = (x.rowwise() - centers.row(0)).rowwise().squaredNorm();
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int c = 1; c < k; ++c) {
    const double total = d2.sum();
    Eigen::Index pick = 0;
    if (total > 0) {
      double target = unit(rng) * total, acc = 0.0;
      for (Eigen::Index i = 0; i < n; ++i) {
        acc += d2(i);
        if (acc >= target) { pick = i; break; }
      }
    } else {
      pick = first(rng);  // all points coincide with chosen centers
    }
    centers.row(c) = x.row(pick);
    d2 = d2.cwiseMin((x.rowwise() - centers.row(c)).rowwise().squaredNorm());
  }
  return centers;
}

KmeansResult lloyd(const Eigen::MatrixXd& x, Eigen::MatrixXd centers, int max_iter) {
  const Eigen::Index n = x.rows();
  const int k = int(centers.rows());
  Eigen::VectorXi labels = Eigen::VectorXi::Constant(n, -1);
  Eigen::VectorXd best_d2(n);

  for (int it = 0; it < max_iter; ++it) {
    bool changed = false;
    for (Eigen::Index i = 0; i < n; ++i) {
      int arg = 0;
      double best = std::numeric_limits<double>::infinity();
      for (int c = 0; c < k; ++c) {
        const double d = (x.row(i) - centers.row(c)).squaredNorm();
        if (d < best) { best = d; arg = c; }
      }
      best_d2(i) = best;
      if (labels(i) != arg) { labels(i) = arg; changed = true; }
    }
    if (!changed) break;

    centers.setZero();
    Eigen::VectorXi counts = Eigen::VectorXi::Zero(k);
    for (Eigen::Index i = 0; i < n; ++i) {
      centers.row(labels(i)) += x.row(i);
      counts(labels(i)) += 1;
    }
    for (int c = 0; c < k; ++c) {
      if (counts(c) > 0) {
        centers.row(c) /= double(counts(c));
      } else {
        // Revive an empty cluster at the worst-assigned point.
        Eigen::Index far;
        best_d2.maxCoeff(&far);
        centers.row(c) = x.row(far);
        best_d2(far) = 0.0;
      }
    }
  }

  KmeansResult out;
  out.labels = std::move(labels);
  out.centers = std::move(centers);
  out.wcss = 0.0;
  for (Eigen::Index i = 0; i < n; ++i)
    out.wcss += (x.row(i) - out.centers.row(out.labels(i))).squaredNorm();
  return out;
}

}  // namespace

KmeansResult kmeans(const Eigen::MatrixXd& points, int k, int restarts,
                    std::uint64_t seed, int max_iterations) {
  if (k <= 0 || k > points.rows())
    throw std::invalid_argument("kmeans: need 0 < k <= number of points");
  if (restarts < 1) throw std::invalid_argument("kmeans: need at least one restart");

  KmeansResult best;
  best.wcss = std::numeric_limits<double>::infinity();
  for (int r = 0; r < restarts; ++r) {
    auto rng = seeded_rng(seed, 0x6d00 + std::uint64_t(r));
    KmeansResult run = lloyd(points, kmeanspp_init(points, k, rng), max_iterations);
    if (run.wcss < best.wcss) best = std::move(run);
  }
  return best;
}

}  // namespace manprox
