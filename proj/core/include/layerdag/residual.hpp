#pragma once

#include <Eigen/Core>
#include <vector>

#include "layerdag/dataset.hpp"
#include "layerdag/precision_estimate.hpp"

namespace layerdag {

/// Precision-matrix regression residual for one node over a scope.
struct ResidualVector {
  Eigen::VectorXd e;       // length n
  int node = 0;            // regressed node label
  std::vector<int> scope;  // node set the precision matrix indexes
};

/// e = x_l + X_{scope \ {l}} * theta_{-ll} / theta_{ll}. Columns are centered
/// before use; theta_ll <= 0 raises NumericalError.
[[nodiscard]] ResidualVector residual(const Dataset& x, const PrecisionEstimate& theta,
                                      int node);

/// Core on an already-centered matrix whose columns match `theta.node_labels`
/// positionally; `local` is the column index of the regressed node.
[[nodiscard]] Eigen::VectorXd residual_from_precision(const Eigen::MatrixXd& centered_scope,
                                                      const Eigen::MatrixXd& theta,
                                                      int local);

}  // namespace layerdag
