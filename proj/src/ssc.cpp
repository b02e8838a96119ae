#include "manprox/ssc.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace manprox {

SscProblem::SscProblem(Eigen::MatrixXd laplacian, double reg_weight, int clusters)
    : u_(reg_weight), r_(clusters) {
  const Eigen::Index n = laplacian.rows();
  if (laplacian.cols() != n) throw std::invalid_argument("SscProblem: square matrix required");
  if (clusters <= 0 || clusters > n)
    throw std::invalid_argument("SscProblem: need 0 < clusters <= N");
  if (reg_weight < 0) throw std::invalid_argument("SscProblem: negative regularization");
  if ((laplacian - laplacian.transpose()).norm() > 1e-10 * (1.0 + laplacian.norm()))
    throw std::invalid_argument("SscProblem: Laplacian must be symmetric");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(laplacian, Eigen::EigenvaluesOnly);
  const double lo = es.eigenvalues().minCoeff();
  const double hi = es.eigenvalues().maxCoeff();
  if (lo < -1e-8 || hi > 2.0 + 1e-8)
    throw std::invalid_argument("SscProblem: spectrum outside [0, 2]");
  s_norm_ = std::max(std::abs(lo), std::abs(hi));
  s_ = std::make_shared<const Eigen::MatrixXd>(std::move(laplacian));
}

double SscProblem::default_step0() const {
  const double lip = lip_grad() + lip_h() * lip_jac();
  return lip > 0 ? 1.0 / lip : 1.0;
}

double SscProblem::smooth_value(const Eigen::MatrixXd& u) const {
  return u.cwiseProduct(*s_ * u).sum();
}

Eigen::MatrixXd SscProblem::smooth_grad(const Eigen::MatrixXd& u) const {
  return 2.0 * (*s_ * u);
}

std::pair<double, Eigen::MatrixXd> SscProblem::objective_and_grad(
    const Eigen::MatrixXd& u) const {
  Eigen::MatrixXd su = *s_ * u;
  return {u.cwiseProduct(su).sum(), 2.0 * su};
}

CompositeProblem SscProblem::composite() const {
  const Eigen::Index n = size();
  CompositeProblem p;
  p.rows = n;
  p.cols = r_;
  p.map_dim = n * n;
  p.identity_map = false;
  p.lip_grad = lip_grad();
  p.lip_h = lip_h();
  p.lip_jac = lip_jac();
  p.attach_l1(u_);

  auto s = s_;
  p.value_f = [s](const Eigen::MatrixXd& u) { return u.cwiseProduct(*s * u).sum(); };
  p.grad_f = [s](const Eigen::MatrixXd& u) -> Eigen::MatrixXd { return 2.0 * (*s * u); };
  p.map_c = [n](const Eigen::MatrixXd& u) -> Eigen::VectorXd {
    const Eigen::MatrixXd g = u * u.transpose();
    return Eigen::Map<const Eigen::VectorXd>(g.data(), n * n);
  };
  p.jac_c = [n](const Eigen::MatrixXd& u, const Eigen::MatrixXd& v) -> Eigen::VectorXd {
    Eigen::MatrixXd g = u * v.transpose();
    g += g.transpose().eval();  // U V^T + V U^T
    return Eigen::Map<const Eigen::VectorXd>(g.data(), n * n);
  };
  p.jac_c_adjoint = [n](const Eigen::MatrixXd& u,
                        const Eigen::VectorXd& lam) -> Eigen::MatrixXd {
    const Eigen::Map<const Eigen::MatrixXd> l(lam.data(), n, n);
    return l * u + l.transpose() * u;  // 2 sym(Lambda) U
  };
  return p;
}

Eigen::MatrixXd SscProblem::spectral_initialize() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(*s_);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("spectral_initialize: eigensolver failed");
  return es.eigenvectors().leftCols(r_);
}

SscDualObjects SscProblem::dual_objects(const Eigen::MatrixXd& u_point, double t) const {
  auto s = s_;
  const double u = u_;
  const Eigen::MatrixXd up = u_point;
  const double trace_term = smooth_value(up);

  SscDualObjects d;
  d.value = [s, u, up, t, trace_term](const Eigen::MatrixXd& lam) -> double {
    if (lam.cwiseAbs().maxCoeff() > u * (1.0 + 1e-12) + 1e-300)
      return -std::numeric_limits<double>::infinity();
    const Eigen::MatrixXd sym = 0.5 * (lam + lam.transpose());
    const Eigen::MatrixXd m = (*s + sym) * up;
    const Eigen::MatrixXd w = m - up * (up.transpose() * m);  // (I - U U^T)(S + sym) U
    return trace_term - 2.0 * t * w.squaredNorm() +
           up.cwiseProduct(lam * up).sum();  // <U U^T, Lambda> = tr(U^T Lambda U)
  };
  d.grad = [s, up, t](const Eigen::MatrixXd& lam) -> Eigen::MatrixXd {
    const Eigen::MatrixXd sym = 0.5 * (lam + lam.transpose());
    const Eigen::MatrixXd m = (*s + sym) * up;
    const Eigen::MatrixXd w = m - up * (up.transpose() * m);
    const Eigen::MatrixXd wu = w * up.transpose();
    return up * up.transpose() - 2.0 * t * (wu + wu.transpose());
  };
  d.link = [s, up, t](const Eigen::MatrixXd& lam) -> Eigen::MatrixXd {
    const Eigen::MatrixXd sym = 0.5 * (lam + lam.transpose());
    const Eigen::MatrixXd m = (*s + sym) * up;
    return -2.0 * t * (m - up * (up.transpose() * m));
  };
  return d;
}

}  // namespace manprox
