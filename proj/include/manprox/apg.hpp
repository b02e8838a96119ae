#pragma once

#include <Eigen/Dense>

#include "manprox/subproblem.hpp"

namespace manprox {

struct ApgOptions {
  int max_iterations = 5000;
  // Armijo halving of the dual substep; when false, the substep is fixed
  // at 1 / (t_k ||B P B^T||_2) with the norm from power iteration.
  bool backtracking = true;
  double initial_substep = 1.0;
  int power_iterations = 30;
  int max_substep_halvings = 60;
  bool record_history = false;
  // Also keep the momentum-combination iterates; only for the ergodic
  // identity audit on small instances.
  bool record_dual_history = false;
  std::vector<Eigen::VectorXd>* dual_history = nullptr;
};

// D_k(lambda) = f(z_k) - t_k/2 ||P(B^T lambda + c_k)||^2 - h*(lambda)
//             + lambda^T d_k. Returns -inf for infeasible lambda.
double dual_value(const SubproblemInstance& sub, const Eigen::VectorXd& lambda);

// x_k(lambda) = -t_k P(B^T lambda + c_k), the tangent step recovered from
// a dual point.
Eigen::MatrixXd link_primal(const SubproblemInstance& sub, const Eigen::VectorXd& lambda);

// Momentum schedule gamma_{j+1} = 2 / (1 + sqrt(1 + 4/gamma_j^2)).
double gamma_next(double gamma);

// 1 / (t_k ||B P B^T||_2) with the operator norm estimated by power
// iteration on the composed action (nothing dense is formed).
double fixed_substep(const SubproblemInstance& sub, int power_iterations = 30);

// Largest t_s = 2^{-s} t_prev whose trial update satisfies
//   ||lambda_a(t_s) - lambda_c||^2 / (2 t_s)
//     >= t_k/2 (lambda_a(t_s) - lambda_c)^T B P B^T (lambda_a(t_s) - lambda_c).
double substep_backtrack(const SubproblemInstance& sub, double gamma,
                         const Eigen::VectorXd& lambda_b, const Eigen::VectorXd& lambda_c,
                         const Eigen::VectorXd& g, double t_prev, int max_halvings = 60);

// Accelerated proximal gradient on the dual of the tangent subproblem with
// ergodic primal recovery. The returned step is x_k(lambda_erg); the
// (primal, dual) pair certifies the stop rule via the duality gap.
SubsolveResult apg_solve(const SubproblemInstance& sub, const StopRule& rule,
                         const Eigen::VectorXd& lambda0, const ApgOptions& opts = {});

}  // namespace manprox
