#include "manprox/ssn.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "manprox/errors.hpp"

namespace manprox {

namespace {

Eigen::Map<const Eigen::VectorXd> as_vector(const Eigen::MatrixXd& m) {
  return {m.data(), m.size()};
}

Eigen::MatrixXd prox_point(const SubproblemInstance& sub, const Eigen::MatrixXd& mu) {
  // Argument of the shifted prox: t (A*(mu) - c_k) + d_k, as a matrix.
  return sub.step * (ssn_constraint_adjoint(sub, mu) - sub.grad_base) + sub.base;
}

}  // namespace

Eigen::MatrixXd ssn_constraint(const SubproblemInstance& sub, const Eigen::MatrixXd& v) {
  Eigen::MatrixXd g = sub.base.transpose() * v;
  return g + g.transpose();
}

Eigen::MatrixXd ssn_constraint_adjoint(const SubproblemInstance& sub,
                                       const Eigen::MatrixXd& mu) {
  return 2.0 * (sub.base * mu);
}

Eigen::MatrixXd ssn_primal(const SubproblemInstance& sub, const Eigen::MatrixXd& mu) {
  const Eigen::MatrixXd q = prox_point(sub, mu);
  const Eigen::VectorXd w = sub.problem->prox_h(as_vector(q), sub.step);
  return Eigen::Map<const Eigen::MatrixXd>(w.data(), q.rows(), q.cols()) - sub.base;
}

double ssn_dual_value(const SubproblemInstance& sub, const Eigen::MatrixXd& mu) {
  const Eigen::MatrixXd xt = ssn_primal(sub, mu);
  const Eigen::MatrixXd w = xt + sub.base;
  return sub.f_base + sub.grad_base.cwiseProduct(xt).sum() +
         sub.problem->value_h(as_vector(w)) + xt.squaredNorm() / (2.0 * sub.step) -
         mu.cwiseProduct(ssn_constraint(sub, xt)).sum();
}

Eigen::MatrixXd ssn_dual_grad(const SubproblemInstance& sub, const Eigen::MatrixXd& mu) {
  return -ssn_constraint(sub, ssn_primal(sub, mu));
}

SubsolveResult ssn_solve(const SubproblemInstance& sub, const StopRule& rule,
                         const Eigen::MatrixXd& mu0, const SsnOptions& opts) {
  const CompositeProblem& p = *sub.problem;
  if (!p.identity_map)
    throw std::invalid_argument("ssn_solve: requires the identity mapping c");
  const Eigen::Index r = sub.base.cols();
  if (mu0.rows() != r || mu0.cols() != r)
    throw std::invalid_argument("ssn_solve: multiplier must be r x r");
  if ((mu0 - mu0.transpose()).norm() > 1e-12 * (1.0 + mu0.norm()))
    throw std::invalid_argument("ssn_solve: multiplier must be symmetric");

  const double t = sub.step;
  const double kink = t * p.reg_weight;
  Eigen::MatrixXd mu = 0.5 * (mu0 + mu0.transpose());

  SubsolveResult out;
  double last_gap = std::numeric_limits<double>::quiet_NaN();
  for (int it = 0; it < opts.max_iterations; ++it) {
    const Eigen::MatrixXd q = prox_point(sub, mu);
    const Eigen::VectorXd w = p.prox_h(as_vector(q), t);
    const Eigen::MatrixXd xt =
        Eigen::Map<const Eigen::MatrixXd>(w.data(), q.rows(), q.cols()) - sub.base;
    const Eigen::MatrixXd xhat = sub.project(xt);

    const double primal = sub.prox_model(xhat);
    const double dualv = sub.f_base + sub.grad_base.cwiseProduct(xt).sum() +
                         p.value_h(w) + xt.squaredNorm() / (2.0 * t) -
                         mu.cwiseProduct(ssn_constraint(sub, xt)).sum();
    const double gap = duality_gap(primal, dualv);
    last_gap = gap;
    out.min_rel_duality_slack =
        std::min(out.min_rel_duality_slack, (primal - dualv) / (1.0 + std::abs(primal)));
    if (opts.record_history) out.history.push_back({primal, dualv, gap});
    out.iterations = it + 1;

    const Eigen::MatrixXd grad = -ssn_constraint(sub, xt);
    const double grad_norm = grad.norm();

    bool done = rule.gap_tol ? gap <= *rule.gap_tol
                             : check_subproblem_stop(rule.type, rule.rho, sub.objective_base,
                                                     primal, dualv, t, xhat.squaredNorm());
    if (opts.grad_tol > 0 && grad_norm <= opts.grad_tol) done = true;
    if (done) {
      out.dual_point = as_vector(mu);
      out.tangent_step = xhat;
      out.primal = primal;
      out.dual = dualv;
      out.gap = gap;
      return out;
    }

    // Clarke Jacobian of the soft threshold at q: diagonal 0/1 mask, 0 on
    // kink coordinates (any element of the Clarke set is admissible).
    const Eigen::ArrayXXd mask = (q.array().abs() > kink).cast<double>();
    const double eta = 0.1 * grad_norm;
    // Newton system (J + eta I) s = grad with J = t A M A*, solved by CG in
    // the space of symmetric matrices.
    const auto apply = [&](const Eigen::MatrixXd& s) -> Eigen::MatrixXd {
      const Eigen::MatrixXd masked = (mask * ssn_constraint_adjoint(sub, s).array()).matrix();
      return t * ssn_constraint(sub, masked) + eta * s;
    };
    const double cg_tol = std::min(0.1, std::sqrt(grad_norm)) * grad_norm;
    Eigen::MatrixXd dir = Eigen::MatrixXd::Zero(r, r);
    Eigen::MatrixXd res = grad;
    Eigen::MatrixXd cg_p = res;
    double rs = res.squaredNorm();
    for (int cg = 0; cg < opts.max_cg_iterations && std::sqrt(rs) > cg_tol; ++cg) {
      const Eigen::MatrixXd ap = apply(cg_p);
      const double denom = cg_p.cwiseProduct(ap).sum();
      if (denom <= 0) break;
      const double step = rs / denom;
      dir += step * cg_p;
      res -= step * ap;
      const double rs_new = res.squaredNorm();
      cg_p = res + (rs_new / rs) * cg_p;
      rs = rs_new;
    }
    double ascent = dir.cwiseProduct(grad).sum();
    if (!(ascent > 1e-12 * dir.norm() * grad_norm)) {
      dir = grad;  // fallback when the Newton direction fails the test
      ascent = grad_norm * grad_norm;
    }

    const double d0 = ssn_dual_value(sub, mu);
    double beta = 1.0;
    int halvings = 0;
    while (ssn_dual_value(sub, mu + beta * dir) < d0 + 1e-4 * beta * ascent &&
           halvings < opts.max_halvings) {
      beta *= 0.5;
      ++halvings;
    }
    mu += beta * dir;
    mu = 0.5 * (mu + mu.transpose());  // keep exact symmetry under rounding
  }
  std::ostringstream msg;
  msg << "ssn_solve: no certificate within " << opts.max_iterations
      << " iterations, last gap " << last_gap;
  throw SubsolverFailure(msg.str(), opts.max_iterations, last_gap);
}

}  // namespace manprox
