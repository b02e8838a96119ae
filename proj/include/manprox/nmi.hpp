#pragma once

#include <Eigen/Dense>

namespace manprox {

// Normalized mutual information I(a;b)/sqrt(H(a) H(b)) in [0,1];
// symmetric and invariant to relabeling. Returns 0 when either labeling
// has a single cluster (zero entropy).
double nmi(const Eigen::VectorXi& a, const Eigen::VectorXi& b);

}  // namespace manprox
