#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cstdint>
#include <stdexcept>

#include "manprox/rng.hpp"

// Geometry of St(n,r) = {U in R^{n x r} : U^T U = I_r}, tangent space
// T_U = {V : U^T V + V^T U = 0}. All functions are pure.
namespace manprox::stiefel {

enum class Retraction { Qr, Polar };

template <typename Derived>
using PlainMatrix = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;

// ||U^T U - I||_F, the feasibility residual.
template <typename Derived>
typename Derived::Scalar orthonormality_error(const Eigen::MatrixBase<Derived>& u) {
  PlainMatrix<Derived> g = u.transpose() * u;
  g.diagonal().array() -= typename Derived::Scalar(1);
  return g.norm();
}

// ||U^T V + V^T U||_F, the tangency residual.
template <typename DU, typename DV>
typename DU::Scalar tangent_residual(const Eigen::MatrixBase<DU>& u,
                                     const Eigen::MatrixBase<DV>& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols())
    throw std::invalid_argument("tangent_residual: shape mismatch");
  PlainMatrix<DU> g = u.transpose() * v;
  return (g + g.transpose()).norm();
}

// Orthogonal projection onto T_U: X - U sym(U^T X), sym(A) = (A + A^T)/2.
template <typename DU, typename DX>
PlainMatrix<DU> project_tangent(const Eigen::MatrixBase<DU>& u,
                                const Eigen::MatrixBase<DX>& x) {
  if (u.rows() != x.rows() || u.cols() != x.cols())
    throw std::invalid_argument("project_tangent: shape mismatch");
  PlainMatrix<DU> g = u.transpose() * x;
  return x - u * ((g + g.transpose()) * typename DU::Scalar(0.5));
}

// Thin QR factor with the sign ambiguity fixed by forcing a positive
// diagonal of the triangular factor; deterministic for full-rank input.
template <typename Derived>
PlainMatrix<Derived> orthonormal_factor_qr(const Eigen::MatrixBase<Derived>& a) {
  using Mat = PlainMatrix<Derived>;
  Eigen::HouseholderQR<Mat> qr(a);
  Mat q = qr.householderQ() * Mat::Identity(a.rows(), a.cols());
  const auto rdiag = qr.matrixQR().diagonal();
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    if (rdiag(j) < typename Derived::Scalar(0)) q.col(j) = -q.col(j);
  return q;
}

// Closest orthonormal matrix: W X^T from the thin SVD A = W S X^T.
template <typename Derived>
PlainMatrix<Derived> orthonormal_factor_polar(const Eigen::MatrixBase<Derived>& a) {
  Eigen::JacobiSVD<PlainMatrix<Derived>> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return svd.matrixU() * svd.matrixV().transpose();
}

// Retr_U(V). V = 0 returns U bitwise, so Retr(0_U) = U holds exactly.
template <typename DU, typename DV>
PlainMatrix<DU> retract(const Eigen::MatrixBase<DU>& u, const Eigen::MatrixBase<DV>& v,
                        Retraction scheme = Retraction::Qr) {
  if (u.rows() != v.rows() || u.cols() != v.cols())
    throw std::invalid_argument("retract: shape mismatch");
  if (v.squaredNorm() == typename DU::Scalar(0)) return u;
  return scheme == Retraction::Qr ? orthonormal_factor_qr(u + v)
                                  : orthonormal_factor_polar(u + v);
}

// Drift repair for long runs; QR of the current point.
template <typename Derived>
PlainMatrix<Derived> reorthonormalize(const Eigen::MatrixBase<Derived>& u) {
  return orthonormal_factor_qr(u);
}

// Orthonormal factor of a seeded Gaussian n x r matrix (via SVD).
inline Eigen::MatrixXd random_point(Eigen::Index n, Eigen::Index r, std::uint64_t seed) {
  if (r > n || n <= 0 || r <= 0)
    throw std::invalid_argument("random_point: need 0 < r <= n");
  auto rng = seeded_rng(seed, /*stream=*/0x5f1e);
  std::normal_distribution<double> gauss;
  Eigen::MatrixXd g(n, r);
  for (Eigen::Index j = 0; j < r; ++j)
    for (Eigen::Index i = 0; i < n; ++i) g(i, j) = gauss(rng);
  return orthonormal_factor_polar(g);
}

}  // namespace manprox::stiefel
