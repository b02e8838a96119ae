#include "manprox/solver.hpp"

#include <cmath>
#include <sstream>

#include "manprox/errors.hpp"

namespace manprox {

double c0_constant(InexactType type, double rho) {
  if (type == InexactType::Lacc) {
    if (rho <= 0) throw std::invalid_argument("c0_constant: rho_l must be positive");
    const double s = std::sqrt(1.0 + rho) + std::sqrt(rho);
    return 1.0 + 1.0 / (s * s);
  }
  if (rho <= 0 || rho >= 0.25)
    throw std::invalid_argument("c0_constant: rho_h must lie in (0, 1/4)");
  const double rp = rho / (1.0 - 2.0 * std::sqrt(rho));
  const double s = std::sqrt(1.0 + rp) + std::sqrt(rp);
  return 1.0 + 1.0 / (s * s);
}

double step_size_update(StepSchedule schedule, double t, double alpha, double t0,
                        double v) {
  switch (schedule) {
    case StepSchedule::Fixed:
      return t;
    case StepSchedule::HalvingDoubling:
      return alpha < 1.0 ? alpha * t : 2.0 * t;
    case StepSchedule::Geometric:
      return alpha == 1.0 ? t * v : std::max(t0, t / v);
  }
  return t;
}

LineSearchResult line_search(const CompositeProblem& p, const Eigen::MatrixXd& z,
                             const Eigen::MatrixXd& ztilde, double objective_z, double t,
                             double c0, int max_halvings, stiefel::Retraction scheme) {
  const Eigen::MatrixXd d = ztilde - z;
  const double dsq = d.squaredNorm();

  double alpha = 1.0;
  double deficit1 = 0.0, deficit2 = 0.0;
  for (int s = 0; s <= max_halvings; ++s, alpha *= 0.5) {
    const Eigen::MatrixXd z_next = stiefel::retract(z, alpha * d, scheme);
    const double f_next = p.objective(z_next);
    const double lhs1 = objective_z - f_next;
    const double rhs1 = c0 * alpha / (4.0 * t) * dsq;
    const double lhs2 = 0.5 * (objective_z + model_value(p, z + alpha * d, z)) - f_next;
    if (lhs1 >= rhs1 && lhs2 >= 0.0)
      return {alpha, z_next, f_next, s, dsq};
    deficit1 = rhs1 - lhs1;
    deficit2 = -lhs2;
  }
  std::ostringstream msg;
  msg << "line_search: no shrink factor within " << max_halvings
      << " halvings; last alpha " << alpha * 2.0 << ", decrease deficit " << deficit1
      << ", model deficit " << deficit2 << ", ||z - z~||^2 = " << dsq;
  throw LineSearchFailure(msg.str(), max_halvings, alpha * 2.0, dsq);
}

Subsolver make_apg_subsolver(ApgOptions opts) {
  return [opts](const SubproblemInstance& sub, const StopRule& rule,
                const Eigen::VectorXd& warm) { return apg_solve(sub, rule, warm, opts); };
}

Subsolver make_ssn_subsolver(SsnOptions opts) {
  return [opts](const SubproblemInstance& sub, const StopRule& rule,
                const Eigen::VectorXd& warm) {
    const Eigen::Index r = sub.base.cols();
    Eigen::MatrixXd mu0 = Eigen::MatrixXd::Zero(r, r);
    if (warm.size() == r * r)
      mu0 = Eigen::Map<const Eigen::MatrixXd>(warm.data(), r, r);
    return ssn_solve(sub, rule, mu0, opts);
  };
}

RunTrace solve(const CompositeProblem& p, const Subsolver& subsolver,
               const SolverConfig& config, Eigen::MatrixXd z0) {
  if (stiefel::orthonormality_error(z0) > 1e-8)
    throw std::invalid_argument("solve: initial point is not orthonormal");
  if (config.geometric_factor < 1.0)
    throw std::invalid_argument("solve: geometric factor must be >= 1");
  const double c0 = c0_constant(config.inexact, config.rho);
  const StopRule rule{config.inexact, config.rho, std::nullopt};

  RunTrace trace;
  Eigen::MatrixXd z = std::move(z0);
  double objective = p.objective(z);
  double t = config.t0;
  Eigen::VectorXd warm = Eigen::VectorXd::Zero(p.map_dim);
  // Below this step size the guaranteed decrease is not representable.
  const double step_floor_sq = 1e-26 * double(z.cols());

  trace.termination = "max_outer";
  for (int k = 0; k < config.max_outer; ++k) {
    auto sub = SubproblemInstance::at(p, z, t);
    SubsolveResult sr;
    try {
      sr = subsolver(sub, rule, warm);
    } catch (SubsolverFailure& e) {
      e.outer_iteration = k;
      throw;
    }
    if (config.warm_start_dual) warm = sr.dual_point;

    if (sr.tangent_step.squaredNorm() <= step_floor_sq) {
      trace.termination = "stationary";
      break;
    }

    LineSearchResult ls;
    try {
      ls = line_search(p, z, z + sr.tangent_step, objective, t, c0,
                       config.max_linesearch_halvings, config.retraction);
    } catch (LineSearchFailure& e) {
      e.outer_iteration = k;
      throw;
    }

    IterationRecord rec;
    rec.k = k;
    rec.objective_before = objective;
    rec.objective_after = ls.objective;
    rec.step_size = t;
    rec.alpha = ls.alpha;
    rec.halvings = ls.halvings;
    rec.subsolver_iterations = sr.iterations;
    rec.gap = sr.gap;
    rec.primal = sr.primal;
    rec.dual = sr.dual;
    rec.step_norm_sq = ls.step_norm_sq;
    rec.min_rel_duality_slack = sr.min_rel_duality_slack;
    trace.records.push_back(rec);
    trace.total_subsolver_iterations += sr.iterations;

    const double decrease = objective - ls.objective;
    z = std::move(ls.point);
    objective = ls.objective;
    if (stiefel::orthonormality_error(z) > 1e-8) z = stiefel::reorthonormalize(z);
    t = step_size_update(config.schedule, t, ls.alpha, config.t0,
                         config.geometric_factor);

    if (config.tol_decrease && decrease <= *config.tol_decrease) {
      trace.termination = "decrease_below";
      break;
    }
    if (config.target_objective && objective <= *config.target_objective) {
      trace.termination = "target_objective";
      break;
    }
  }
  trace.final_point = std::move(z);
  trace.final_objective = objective;
  return trace;
}

}  // namespace manprox
