#include "manprox/apg.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "manprox/errors.hpp"
#include "manprox/rng.hpp"

namespace manprox {

double dual_value(const SubproblemInstance& sub, const Eigen::VectorXd& lambda) {
  const double hc = sub.problem->conj_h(lambda);
  if (!std::isfinite(hc)) return -std::numeric_limits<double>::infinity();
  const Eigen::MatrixXd w = sub.project(sub.jac_adjoint(lambda) + sub.grad_base);
  return sub.f_base - 0.5 * sub.step * w.squaredNorm() - hc + lambda.dot(sub.map_base);
}

Eigen::MatrixXd link_primal(const SubproblemInstance& sub, const Eigen::VectorXd& lambda) {
  return -sub.step * sub.project(sub.jac_adjoint(lambda) + sub.grad_base);
}

double gamma_next(double gamma) {
  return 2.0 / (1.0 + std::sqrt(1.0 + 4.0 / (gamma * gamma)));
}

double fixed_substep(const SubproblemInstance& sub, int power_iterations) {
  const Eigen::Index m = sub.problem->map_dim;
  auto rng = seeded_rng(0xb0b, 0xcafe);
  std::normal_distribution<double> gauss;
  Eigen::VectorXd v(m);
  for (Eigen::Index i = 0; i < m; ++i) v(i) = gauss(rng);
  v.normalize();
  double norm = 0.0;
  for (int it = 0; it < power_iterations; ++it) {
    Eigen::VectorXd w = sub.curvature_apply(v);
    norm = w.norm();
    if (norm <= 1e-300) return 1.0 / sub.step;  // B P B^T = 0
    v = w / norm;
  }
  return 1.0 / (sub.step * norm);
}

double substep_backtrack(const SubproblemInstance& sub, double gamma,
                         const Eigen::VectorXd& lambda_b, const Eigen::VectorXd& lambda_c,
                         const Eigen::VectorXd& g, double t_prev, int max_halvings) {
  // The trial point only moves lambda_b; lambda_a(t_s) - lambda_c reduces
  // to gamma (lambda_b(t_s) - lambda_b) because lambda_c was combined from
  // the same lambda_a with the same gamma.
  (void)lambda_c;
  double ts = t_prev;
  for (int s = 0; s <= max_halvings; ++s, ts *= 0.5) {
    const Eigen::VectorXd lb_trial =
        sub.problem->prox_conj_h(lambda_b - (ts / gamma) * g, ts / gamma);
    const Eigen::VectorXd delta = gamma * (lb_trial - lambda_b);
    const double lhs = delta.squaredNorm() / (2.0 * ts);
    const double rhs = 0.5 * sub.step * delta.dot(sub.curvature_apply(delta));
    if (lhs >= rhs) return ts;
  }
  throw SubsolverFailure("substep_backtrack: halving budget exhausted", max_halvings, 0.0);
}

SubsolveResult apg_solve(const SubproblemInstance& sub, const StopRule& rule,
                         const Eigen::VectorXd& lambda0, const ApgOptions& opts) {
  const Eigen::Index m = sub.problem->map_dim;
  if (lambda0.size() != m)
    throw std::invalid_argument("apg_solve: dual start has wrong dimension");
  if (!std::isfinite(sub.problem->conj_h(lambda0)))
    throw std::invalid_argument("apg_solve: dual start infeasible for h*");

  Eigen::VectorXd la = lambda0, lb = lambda0, lc = lambda0;
  Eigen::VectorXd erg_num = Eigen::VectorXd::Zero(m);
  double erg_den = 0.0;
  double gamma = 1.0;
  double tkj = opts.backtracking ? opts.initial_substep : fixed_substep(sub, opts.power_iterations);

  SubsolveResult out;
  double last_gap = std::numeric_limits<double>::quiet_NaN();
  for (int j = 0; j < opts.max_iterations; ++j) {
    lc = (1.0 - gamma) * la + gamma * lb;
    // g^{j+1} = t_k B P (B^T lc + c_k) - d_k
    const Eigen::MatrixXd w = sub.project(sub.jac_adjoint(lc) + sub.grad_base);
    const Eigen::VectorXd g = sub.step * sub.jac_apply(w) - sub.map_base;

    if (opts.backtracking)
      tkj = substep_backtrack(sub, gamma, lb, lc, g, tkj, opts.max_substep_halvings);
    lb = sub.problem->prox_conj_h(lb - (tkj / gamma) * g, tkj / gamma);
    la = (1.0 - gamma) * la + gamma * lb;

    erg_num += lc / gamma;
    erg_den += 1.0 / gamma;
    const Eigen::VectorXd lerg = erg_num / erg_den;
    if (opts.record_dual_history && opts.dual_history) opts.dual_history->push_back(lc);

    const Eigen::MatrixXd x = link_primal(sub, lerg);
    const double primal = sub.prox_model(x);
    const double dual = dual_value(sub, la);
    const double gap = duality_gap(primal, dual);
    last_gap = gap;

    out.min_rel_duality_slack =
        std::min(out.min_rel_duality_slack, (primal - dual) / (1.0 + std::abs(primal)));
    if (opts.record_history) out.history.push_back({primal, dual, gap});
    out.iterations = j + 1;

    const bool done = rule.gap_tol
                          ? gap <= *rule.gap_tol
                          : check_subproblem_stop(rule.type, rule.rho, sub.objective_base,
                                                  primal, dual, sub.step, x.squaredNorm());
    if (done) {
      out.dual_point = la;
      out.tangent_step = x;
      out.primal = primal;
      out.dual = dual;
      out.gap = gap;
      return out;
    }
    gamma = gamma_next(gamma);
  }
  std::ostringstream msg;
  msg << "apg_solve: no certificate within " << opts.max_iterations
      << " iterations, last gap " << last_gap;
  throw SubsolverFailure(msg.str(), opts.max_iterations, last_gap);
}

}  // namespace manprox
