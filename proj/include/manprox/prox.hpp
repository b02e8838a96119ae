#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <sstream>

#include "manprox/errors.hpp"

namespace manprox {

// Componentwise sign(x) max(|x| - tau, 0); the proximal map of tau*||.||_1.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> soft_threshold(
    const Eigen::MatrixBase<Derived>& x, typename Derived::Scalar tau) {
  using Scalar = typename Derived::Scalar;
  return x.unaryExpr([tau](Scalar v) {
    const Scalar m = std::abs(v) - tau;
    return m > Scalar(0) ? (v > Scalar(0) ? m : -m) : Scalar(0);
  });
}

// Componentwise clamp to [-radius, radius]; the proximal map of the
// indicator of the l_inf ball, i.e. of the conjugate of radius*||.||_1.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> project_linf_ball(
    const Eigen::MatrixBase<Derived>& x, typename Derived::Scalar radius) {
  using Scalar = typename Derived::Scalar;
  return x.unaryExpr([radius](Scalar v) {
    return v > radius ? radius : (v < -radius ? -radius : v);
  });
}

// primal - dual, clamped at zero for tiny negatives caused by rounding.
// A violation beyond -1e-6 * (1 + |primal|) means a dual evaluation is
// wrong and throws rather than being silently absorbed.
inline double duality_gap(double primal, double dual) {
  const double gap = primal - dual;
  if (gap < -1e-6 * (1.0 + std::abs(primal))) {
    std::ostringstream msg;
    msg << "duality_gap: weak duality violated, primal=" << primal
        << " dual=" << dual << " gap=" << gap;
    throw DualityViolation(primal, dual, msg.str());
  }
  return gap > 0.0 ? gap : 0.0;
}

}  // namespace manprox
