#pragma once

#include <Eigen/Dense>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "manprox/composite_problem.hpp"
#include "manprox/prox.hpp"
#include "manprox/stiefel.hpp"

namespace manprox {

enum class InexactType { Lacc, Hacc };

// Accuracy rule for a tangent subproblem solve. `gap_tol`, when set,
// bypasses the adaptive rules and demands an absolute duality gap; used
// by reference solves in tests, not by the outer loop.
struct StopRule {
  InexactType type = InexactType::Lacc;
  double rho = 0.2;
  std::optional<double> gap_tol;
};

// Linearization of F at (z_k, t_k), frozen so subproblem solvers never
// re-evaluate f, grad f or c at the base point.
struct SubproblemInstance {
  const CompositeProblem* problem = nullptr;
  Eigen::MatrixXd base;       // z_k
  double step = 0.0;          // t_k
  Eigen::MatrixXd grad_base;  // grad f(z_k)
  Eigen::VectorXd map_base;   // c(z_k)
  double f_base = 0.0;
  double objective_base = 0.0;  // F(z_k)

  static SubproblemInstance at(const CompositeProblem& p, Eigen::MatrixXd z, double t) {
    if (t <= 0) throw std::invalid_argument("SubproblemInstance: step must be positive");
    SubproblemInstance s;
    s.problem = &p;
    s.base = std::move(z);
    s.step = t;
    s.grad_base = p.grad_f(s.base);
    s.map_base = p.map_c(s.base);
    s.f_base = p.value_f(s.base);
    s.objective_base = s.f_base + p.value_h(s.map_base);
    return s;
  }

  // Tangent projector at the base point. Replaces the row-orthonormal
  // basis view of the tangent space everywhere: both are the orthogonal
  // projector onto T_{z_k}, and the basis is never materialized.
  Eigen::MatrixXd project(const Eigen::MatrixXd& x) const {
    return stiefel::project_tangent(base, x);
  }

  // F(z_k + x; z_k) for a step x in the ambient space.
  double model(const Eigen::MatrixXd& x) const {
    return f_base + grad_base.cwiseProduct(x).sum() +
           problem->value_h(map_base + problem->jac_c(base, x));
  }

  // F_t(z_k + x; z_k).
  double prox_model(const Eigen::MatrixXd& x) const {
    return model(x) + x.squaredNorm() / (2.0 * step);
  }

  Eigen::MatrixXd jac_adjoint(const Eigen::VectorXd& lambda) const {
    return problem->jac_c_adjoint(base, lambda);
  }
  Eigen::VectorXd jac_apply(const Eigen::MatrixXd& v) const {
    return problem->jac_c(base, v);
  }

  // w -> B P B^T w, the curvature operator of the dual quadratic.
  Eigen::VectorXd curvature_apply(const Eigen::VectorXd& w) const {
    return jac_apply(project(jac_adjoint(w)));
  }
};

// Certified sufficient condition for accepting an inexact subproblem
// solution: gap <= rho_l (F(z_k) - F_t) under LACC, or
// gap <= rho_h/(2 t_k) ||step||^2 under HACC, with gap = primal - dual.
inline bool check_subproblem_stop(InexactType type, double rho, double f_base,
                                  double primal, double dual, double t,
                                  double step_norm_sq) {
  const double gap = duality_gap(primal, dual);
  if (type == InexactType::Lacc) return gap <= rho * (f_base - primal);
  return gap <= rho / (2.0 * t) * step_norm_sq;
}

// State snapshot of one subproblem solver iterate, kept for audits.
struct SubIterRecord {
  double primal;
  double dual;
  double gap;
};

struct SubsolveResult {
  Eigen::VectorXd dual_point;    // final dual iterate (vectorized)
  Eigen::MatrixXd tangent_step;  // x with z~ = z_k + x, tangent at z_k
  double primal = 0.0;           // F_t(z_k + x; z_k)
  double dual = 0.0;
  double gap = 0.0;
  int iterations = 0;
  // min over iterates of (primal - dual) / (1 + |primal|); the weak
  // duality audit consumes this without storing full histories.
  double min_rel_duality_slack = std::numeric_limits<double>::infinity();
  std::vector<SubIterRecord> history;  // filled only when requested
};

}  // namespace manprox
