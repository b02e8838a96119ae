#pragma once

#include <Eigen/Dense>
#include <functional>
#include <memory>

#include "manprox/composite_problem.hpp"

namespace manprox {

// Dual-side callables specialized to the clustering objective; used to
// cross-check the operator-form generic path and by tests. Lambda is the
// N x N dual variable, symmetrized internally.
struct SscDualObjects {
  std::function<double(const Eigen::MatrixXd&)> value;
  std::function<Eigen::MatrixXd(const Eigen::MatrixXd&)> grad;  // grad of value
  std::function<Eigen::MatrixXd(const Eigen::MatrixXd&)> link;  // V_k(Lambda)
};

// min_{U in St(N,r)} <U, SU> + u ||vec(U U^T)||_1 with S a normalized
// graph Laplacian. The Jacobian of c(U) = vec(U U^T) acts as
// V -> vec(U V^T + V U^T); nothing of size N^2 x Nr is ever formed.
class SscProblem {
 public:
  SscProblem(Eigen::MatrixXd laplacian, double reg_weight, int clusters);

  const Eigen::MatrixXd& laplacian() const { return *s_; }
  double reg_weight() const { return u_; }
  int clusters() const { return r_; }
  Eigen::Index size() const { return s_->rows(); }

  double lip_grad() const { return 2.0 * s_norm_; }      // L_f = 2 ||S||_2
  double lip_h() const { return double(size()) * u_; }   // L_h = N u
  double lip_jac() const { return 2.0; }                 // L_c
  double default_step0() const;                          // 1 / (L_f + L_h L_c)

  double smooth_value(const Eigen::MatrixXd& u) const;
  Eigen::MatrixXd smooth_grad(const Eigen::MatrixXd& u) const;  // 2 S U
  std::pair<double, Eigen::MatrixXd> objective_and_grad(const Eigen::MatrixXd& u) const;

  CompositeProblem composite() const;

  // Columns are eigenvectors of the r smallest eigenvalues of S (the
  // solution of the u = 0 relaxation).
  Eigen::MatrixXd spectral_initialize() const;

  SscDualObjects dual_objects(const Eigen::MatrixXd& u_point, double t) const;

 private:
  std::shared_ptr<const Eigen::MatrixXd> s_;
  double u_;
  int r_;
  double s_norm_;
};

}  // namespace manprox
