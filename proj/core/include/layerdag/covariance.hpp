#pragma once

#include <Eigen/Core>
#include <vector>

#include "layerdag/dataset.hpp"

namespace layerdag {

/// Centers the columns and returns (1/n) Xc^T Xc. Requires n >= 2.
[[nodiscard]] Eigen::MatrixXd empirical_covariance(const Eigen::MatrixXd& values);

/// Covariance over the dataset columns selected by 1-based node labels,
/// in the order given.
[[nodiscard]] Eigen::MatrixXd empirical_covariance(const Dataset& dataset,
                                                   const std::vector<int>& subset);

/// Regularization schedule c * sqrt(log(max{q, n}) / n).
[[nodiscard]] double lambda_schedule(int q, int n, double c);

}  // namespace layerdag
