#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <memory>

#include "manprox/composite_problem.hpp"

namespace manprox {

// min_{U in St(N,r)} -||A U||_F^2 + u ||vec(U)||_1 for a data matrix
// A in R^{N1 x N}; c is the identity, so the Newton subsolver applies.
class SpcaProblem {
 public:
  SpcaProblem(Eigen::MatrixXd data, double reg_weight, int components);

  const Eigen::MatrixXd& data() const { return *a_; }
  double reg_weight() const { return u_; }
  int components() const { return r_; }
  Eigen::Index size() const { return a_->cols(); }  // N

  double data_norm() const { return a_norm_; }  // ||A||_2
  double lip_grad() const { return 2.0 * a_norm_ * a_norm_; }
  double default_step0() const { return 1.0 / lip_grad(); }  // 1/(2 ||A||_2^2)

  double smooth_value(const Eigen::MatrixXd& u) const;
  Eigen::MatrixXd smooth_grad(const Eigen::MatrixXd& u) const;  // -2 A^T A U
  std::pair<double, Eigen::MatrixXd> objective_and_grad(const Eigen::MatrixXd& u) const;

  CompositeProblem composite() const;

  // Orthonormal factor of a seeded Gaussian N x r matrix.
  Eigen::MatrixXd svd_initialize(std::uint64_t seed) const;

 private:
  std::shared_ptr<const Eigen::MatrixXd> a_;
  double u_;
  int r_;
  double a_norm_;
};

}  // namespace manprox
