#include "manprox/spca.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

#include "manprox/stiefel.hpp"

namespace manprox {

SpcaProblem::SpcaProblem(Eigen::MatrixXd data, double reg_weight, int components)
    : u_(reg_weight), r_(components) {
  if (data.rows() <= 0 || data.cols() <= 0)
    throw std::invalid_argument("SpcaProblem: empty data matrix");
  if (components <= 0 || components > std::min(data.rows(), data.cols()))
    throw std::invalid_argument("SpcaProblem: need 0 < r <= min(N1, N)");
  if (reg_weight < 0) throw std::invalid_argument("SpcaProblem: negative regularization");
  // ||A||_2 from the Gram spectrum; exact up to symmetric-eigensolver
  // accuracy, which the step-size contract (1e-10 relative) needs.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(data.transpose() * data,
                                                    Eigen::EigenvaluesOnly);
  a_norm_ = std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
  a_ = std::make_shared<const Eigen::MatrixXd>(std::move(data));
}

double SpcaProblem::smooth_value(const Eigen::MatrixXd& u) const {
  return -(*a_ * u).squaredNorm();
}

Eigen::MatrixXd SpcaProblem::smooth_grad(const Eigen::MatrixXd& u) const {
  return -2.0 * (a_->transpose() * (*a_ * u));
}

std::pair<double, Eigen::MatrixXd> SpcaProblem::objective_and_grad(
    const Eigen::MatrixXd& u) const {
  Eigen::MatrixXd au = *a_ * u;
  return {-au.squaredNorm(), -2.0 * (a_->transpose() * au)};
}

CompositeProblem SpcaProblem::composite() const {
  const Eigen::Index n = size();
  CompositeProblem p;
  p.rows = n;
  p.cols = r_;
  p.map_dim = n * r_;
  p.identity_map = true;
  p.lip_grad = lip_grad();
  p.lip_h = u_ * std::sqrt(double(n * r_));
  p.lip_jac = 0.0;  // constant Jacobian
  p.attach_l1(u_);

  auto a = a_;
  p.value_f = [a](const Eigen::MatrixXd& u) { return -(*a * u).squaredNorm(); };
  p.grad_f = [a](const Eigen::MatrixXd& u) -> Eigen::MatrixXd {
    return -2.0 * (a->transpose() * (*a * u));
  };
  p.map_c = [](const Eigen::MatrixXd& u) -> Eigen::VectorXd {
    return Eigen::Map<const Eigen::VectorXd>(u.data(), u.size());
  };
  p.jac_c = [](const Eigen::MatrixXd&, const Eigen::MatrixXd& v) -> Eigen::VectorXd {
    return Eigen::Map<const Eigen::VectorXd>(v.data(), v.size());
  };
  p.jac_c_adjoint = [n, r = r_](const Eigen::MatrixXd&,
                                const Eigen::VectorXd& lam) -> Eigen::MatrixXd {
    return Eigen::Map<const Eigen::MatrixXd>(lam.data(), n, r);
  };
  return p;
}

Eigen::MatrixXd SpcaProblem::svd_initialize(std::uint64_t seed) const {
  return stiefel::random_point(size(), r_, seed);
}

}  // namespace manprox
