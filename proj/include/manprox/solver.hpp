#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "manprox/apg.hpp"
#include "manprox/composite_problem.hpp"
#include "manprox/ssn.hpp"
#include "manprox/stiefel.hpp"
#include "manprox/subproblem.hpp"

namespace manprox {

enum class StepSchedule { Fixed, HalvingDoubling, Geometric };

struct SolverConfig {
  InexactType inexact = InexactType::Lacc;
  double rho = 0.2;  // rho_l > 0, or rho_h in (0, 1/4)
  double t0 = 0.1;
  StepSchedule schedule = StepSchedule::HalvingDoubling;
  double geometric_factor = 1.01;  // v >= 1
  stiefel::Retraction retraction = stiefel::Retraction::Qr;
  int max_outer = 1000;
  int max_linesearch_halvings = 60;
  // Terminate once F(z_k) - F(z_{k+1}) <= tol_decrease; disabled when unset.
  std::optional<double> tol_decrease = 1e-5;
  std::optional<double> target_objective;
  // Start each subsolve from the previous outer iteration's dual point
  // instead of zero.
  bool warm_start_dual = false;
};

struct IterationRecord {
  int k = 0;
  double objective_before = 0.0;  // F(z_k)
  double objective_after = 0.0;   // F(z_{k+1})
  double step_size = 0.0;         // t_k
  double alpha = 0.0;             // accepted shrink factor
  int halvings = 0;
  int subsolver_iterations = 0;  // J_k
  double gap = 0.0;              // certified duality gap at acceptance
  double primal = 0.0;           // F_t(z~; z_k)
  double dual = 0.0;
  double step_norm_sq = 0.0;  // ||z~ - z_k||^2, as used by the line search
  double min_rel_duality_slack = 0.0;
  // ||z~ - z_k|| / t_k, the computable stationarity surrogate.
  double surrogate() const { return std::sqrt(step_norm_sq) / step_size; }
};

struct RunTrace {
  std::vector<IterationRecord> records;
  Eigen::MatrixXd final_point;
  double final_objective = 0.0;
  std::string termination;  // decrease_below | target_objective | max_outer | stationary
  long total_subsolver_iterations = 0;
};

// c0 constant of the retraction line search:
//   LACC: 1 + 1/(sqrt(1+rho_l) + sqrt(rho_l))^2
//   HACC: same with rho' = rho_h / (1 - 2 sqrt(rho_h)).
double c0_constant(InexactType type, double rho);

// t_{k+1} from (schedule, t_k, alpha_k):
//   halving/doubling: alpha < 1 -> alpha t_k, alpha = 1 -> 2 t_k
//   geometric(v):     alpha = 1 -> v t_k,     alpha < 1 -> max(t0, t_k/v)
//   fixed:            t_k.
double step_size_update(StepSchedule schedule, double t, double alpha, double t0,
                        double v);

struct LineSearchResult {
  double alpha = 1.0;
  Eigen::MatrixXd point;
  double objective = 0.0;
  int halvings = 0;
  double step_norm_sq = 0.0;
};

// Armijo backtracking over alpha in {2^{-s}} until both acceptance
// conditions hold:
//   F(z_k) - F(z_{k+1})                  >= c0 alpha/(4 t) ||z_k - z~||^2
//   (F(z_k) + F(z_k + alpha(z~-z_k); z_k))/2 - F(z_{k+1}) >= 0.
LineSearchResult line_search(const CompositeProblem& p, const Eigen::MatrixXd& z,
                             const Eigen::MatrixXd& ztilde, double objective_z, double t,
                             double c0, int max_halvings,
                             stiefel::Retraction scheme = stiefel::Retraction::Qr);

// Subproblem solver: (instance, rule, warm dual start) -> certified step.
using Subsolver =
    std::function<SubsolveResult(const SubproblemInstance&, const StopRule&,
                                 const Eigen::VectorXd&)>;

Subsolver make_apg_subsolver(ApgOptions opts = {});
Subsolver make_ssn_subsolver(SsnOptions opts = {});

// Outer loop: freeze the linearization at (z_k, t_k), subsolve to the
// configured accuracy, retract with the two-condition line search, then
// update the step size. The trace is monotone in F by construction.
RunTrace solve(const CompositeProblem& p, const Subsolver& subsolver,
               const SolverConfig& config, Eigen::MatrixXd z0);

}  // namespace manprox
