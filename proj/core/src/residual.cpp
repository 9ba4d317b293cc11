#include "layerdag/residual.hpp"

#include <stdexcept>

#include "layerdag/errors.hpp"

namespace layerdag {

Eigen::VectorXd residual_from_precision(const Eigen::MatrixXd& centered_scope,
                                        const Eigen::MatrixXd& theta, int local) {
  const int q = static_cast<int>(theta.rows());
  if (local < 0 || local >= q) {
    throw std::invalid_argument("local index out of range");
  }
  const double theta_ll = theta(local, local);
  if (!(theta_ll > 0.0)) {
    throw NumericalError("precision diagonal entry for the regressed node is not positive");
  }
  Eigen::VectorXd e = centered_scope.col(local);
  for (int k = 0; k < q; ++k) {
    if (k != local) {
      e += centered_scope.col(k) * (theta(k, local) / theta_ll);
    }
  }
  return e;
}

ResidualVector residual(const Dataset& x, const PrecisionEstimate& theta, int node) {
  const int q = theta.size();
  Eigen::MatrixXd scope_values(x.n(), q);
  for (int j = 0; j < q; ++j) {
    const int label = theta.node_labels[j];
    if (label < 1 || label > x.p()) {
      throw std::invalid_argument("precision scope label " + std::to_string(label) +
                                  " outside dataset columns");
    }
    scope_values.col(j) = x.values.col(label - 1);
  }
  ResidualVector out;
  out.node = node;
  out.scope = theta.node_labels;
  out.e = residual_from_precision(centered(scope_values), theta.theta, theta.index_of(node));
  return out;
}

}  // namespace layerdag
