#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "manprox/prox.hpp"

namespace manprox {

// Contract for F(z) = f(z) + h(c(z)) with z an n x r matrix (column-stacked
// when a vector view is needed), f, c smooth and h convex Lipschitz.
//
// Jacobians of c are exposed only as forward/adjoint actions. For the
// clustering instance the dense Jacobian would be N^2 x Nr and must never
// be materialized; every action below costs O(N^2 r) there.
struct CompositeProblem {
  Eigen::Index rows = 0;      // n (point rows)
  Eigen::Index cols = 0;      // r (point columns)
  Eigen::Index map_dim = 0;   // m, codomain dimension of c
  bool identity_map = false;  // c(z) = z (then map_dim == rows*cols)

  double reg_weight = 0.0;  // u in h = u*||.||_1 (the shipped family)
  double lip_grad = 0.0;    // L_f
  double lip_h = 0.0;       // L_h
  double lip_jac = 0.0;     // L_c

  std::function<double(const Eigen::MatrixXd&)> value_f;
  std::function<Eigen::MatrixXd(const Eigen::MatrixXd&)> grad_f;
  std::function<Eigen::VectorXd(const Eigen::MatrixXd&)> map_c;
  // Action of the Jacobian of c at z on a direction, and its adjoint.
  std::function<Eigen::VectorXd(const Eigen::MatrixXd&, const Eigen::MatrixXd&)> jac_c;
  std::function<Eigen::MatrixXd(const Eigen::MatrixXd&, const Eigen::VectorXd&)> jac_c_adjoint;

  std::function<double(const Eigen::VectorXd&)> value_h;
  std::function<double(const Eigen::VectorXd&)> conj_h;  // h*, +inf off-domain
  // prox of tau*h and prox of sigma*h*.
  std::function<Eigen::VectorXd(const Eigen::VectorXd&, double)> prox_h;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&, double)> prox_conj_h;

  double lip_model() const { return lip_grad + lip_h * lip_jac; }
  // sup ||l1 - l2|| over dom h*; 2u sqrt(m) for the l1 family. Appears in
  // complexity bounds only, never at runtime.
  double dual_diameter() const { return 2.0 * reg_weight * std::sqrt(double(map_dim)); }

  double objective(const Eigen::MatrixXd& z) const { return value_f(z) + value_h(map_c(z)); }

  // Wires the h = u*||.||_1 family: value, conjugate (indicator of the
  // l_inf ball of radius u), and both proximal maps.
  void attach_l1(double u) {
    if (u < 0) throw std::invalid_argument("attach_l1: negative weight");
    reg_weight = u;
    value_h = [u](const Eigen::VectorXd& y) { return u * y.lpNorm<1>(); };
    conj_h = [u](const Eigen::VectorXd& lam) {
      return lam.lpNorm<Eigen::Infinity>() <= u * (1.0 + 1e-12) + 1e-300
                 ? 0.0
                 : std::numeric_limits<double>::infinity();
    };
    prox_h = [u](const Eigen::VectorXd& y, double tau) {
      return soft_threshold(y, tau * u);
    };
    prox_conj_h = [u](const Eigen::VectorXd& lam, double) {
      return project_linf_ball(lam, u);
    };
  }
};

// F(z; y) = f(y) + <grad f(y), z - y> + h(c(y) + Dc(y)[z - y]), the convex
// model of F at base point y evaluated at z.
inline double model_value(const CompositeProblem& p, const Eigen::MatrixXd& z,
                          const Eigen::MatrixXd& y) {
  const Eigen::MatrixXd d = z - y;
  return p.value_f(y) + p.grad_f(y).cwiseProduct(d).sum() +
         p.value_h(p.map_c(y) + p.jac_c(y, d));
}

// F_t(z; y) = F(z; y) + ||z - y||^2 / (2t).
inline double prox_model_value(const CompositeProblem& p, const Eigen::MatrixXd& z,
                               const Eigen::MatrixXd& y, double t) {
  if (t <= 0) throw std::invalid_argument("prox_model_value: step must be positive");
  return model_value(p, z, y) + (z - y).squaredNorm() / (2.0 * t);
}

}  // namespace manprox
