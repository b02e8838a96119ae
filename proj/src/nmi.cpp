#include "manprox/nmi.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

namespace manprox {

namespace {
std::vector<int> compact(const Eigen::VectorXi& labels, int& classes) {
  std::map<int, int> index;
  std::vector<int> out(labels.size());
  for (Eigen::Index i = 0; i < labels.size(); ++i) {
    auto [it, fresh] = index.emplace(labels(i), int(index.size()));
    (void)fresh;
    out[std::size_t(i)] = it->second;
  }
  classes = int(index.size());
  return out;
}
}  // namespace

double nmi(const Eigen::VectorXi& a, const Eigen::VectorXi& b) {
  if (a.size() != b.size()) throw std::invalid_argument("nmi: length mismatch");
  if (a.size() == 0) throw std::invalid_argument("nmi: empty labelings");
  const double n = double(a.size());

  int ca = 0, cb = 0;
  const std::vector<int> la = compact(a, ca);
  const std::vector<int> lb = compact(b, cb);

  Eigen::MatrixXd joint = Eigen::MatrixXd::Zero(ca, cb);
  for (std::size_t i = 0; i < la.size(); ++i) joint(la[i], lb[i]) += 1.0;
  joint /= n;
  const Eigen::VectorXd pa = joint.rowwise().sum();
  const Eigen::VectorXd pb = joint.colwise().sum();

  double info = 0.0;
  for (int i = 0; i < ca; ++i)
    for (int j = 0; j < cb; ++j)
      if (joint(i, j) > 0) info += joint(i, j) * std::log(joint(i, j) / (pa(i) * pb(j)));

  auto entropy = [](const Eigen::VectorXd& p) {
    double h = 0.0;
    for (Eigen::Index i = 0; i < p.size(); ++i)
      if (p(i) > 0) h -= p(i) * std::log(p(i));
    return h;
  };
  const double ha = entropy(pa), hb = entropy(pb);
  if (ha <= 0.0 || hb <= 0.0) return 0.0;
  const double v = info / std::sqrt(ha * hb);
  return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
}

}  // namespace manprox
