#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

namespace layerdag {

/// Symmetric positive-definite precision matrix over a labeled node scope.
struct PrecisionEstimate {
  Eigen::MatrixXd theta;         // q x q
  double lambda = 0.0;           // regularization used to produce theta
  std::vector<int> node_labels;  // global labels for rows/columns, sorted
  bool converged = true;
  int iterations = 0;
  double kkt = 0.0;              // achieved KKT residual max-norm

  [[nodiscard]] int size() const { return static_cast<int>(theta.rows()); }

  /// Local row/column index of a global node label; throws if absent.
  [[nodiscard]] int index_of(int label) const;

  /// Symmetry within 1e-10 and a successful Cholesky factorization.
  void validate() const;

  [[nodiscard]] std::string to_json() const;
  static PrecisionEstimate from_json(const std::string& text);
};

}  // namespace layerdag
