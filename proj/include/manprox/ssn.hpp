#pragma once

#include <Eigen/Dense>

#include "manprox/subproblem.hpp"

// Dual semismooth Newton solver for the tangent subproblem when c is the
// identity. The dual variable is the symmetric r x r multiplier of the
// tangency constraint A(V) = U^T V + V^T U = 0; no basis of the normal
// space is ever materialized.
namespace manprox {

struct SsnOptions {
  int max_iterations = 200;
  int max_cg_iterations = 400;
  int max_halvings = 40;
  // Extra success condition ||grad D~|| <= grad_tol when positive; used by
  // reference solves in tests.
  double grad_tol = 0.0;
  bool record_history = false;
};

// A(V) for the base point of `sub`.
Eigen::MatrixXd ssn_constraint(const SubproblemInstance& sub, const Eigen::MatrixXd& v);
// A*(mu) = 2 U mu for symmetric mu.
Eigen::MatrixXd ssn_constraint_adjoint(const SubproblemInstance& sub, const Eigen::MatrixXd& mu);

// x~(mu), the unique minimizer of the 1/t_k-strongly-convex Lagrangian:
// prox_{t h}(t (A*(mu) - c_k) + d_k) - d_k, in matrix form.
Eigen::MatrixXd ssn_primal(const SubproblemInstance& sub, const Eigen::MatrixXd& mu);

// D~(mu), the (smooth, concave) dual function value.
double ssn_dual_value(const SubproblemInstance& sub, const Eigen::MatrixXd& mu);

// grad D~(mu) = -A(x~(mu)), the negated constraint residual.
Eigen::MatrixXd ssn_dual_grad(const SubproblemInstance& sub, const Eigen::MatrixXd& mu);

// Regularized semismooth Newton on grad D~ = 0 with CG inner solves and a
// gradient-step fallback. Returns the projected primal x^ = P(x~) as the
// tangent step; the stop rule is certified with ||x^||^2 and the gap
// F_t(x^ + z_k; z_k) - D~(mu).
SubsolveResult ssn_solve(const SubproblemInstance& sub, const StopRule& rule,
                         const Eigen::MatrixXd& mu0, const SsnOptions& opts = {});

}  // namespace manprox
