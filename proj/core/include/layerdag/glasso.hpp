#pragma once

#include <Eigen/Core>

#include "layerdag/precision_estimate.hpp"

namespace layerdag {

struct GlassoOptions {
  double tol = 1e-6;   // stop when the KKT residual max-norm falls below this
  int max_iter = 500;  // block coordinate-descent sweeps
};

/// L1-penalized precision estimation: maximizes
///   log det Theta - tr(S Theta) - lambda * sum_{l != k} |Theta_lk|
/// by block coordinate descent over columns (only off-diagonal entries are
/// penalized, so diag(Theta^{-1}) = diag(S) at the optimum).
///
/// A solve that exhausts max_iter returns with `converged = false` and the
/// last KKT residual in `kkt`; lambda = 0 on a singular S raises
/// NumericalError.
[[nodiscard]] PrecisionEstimate glasso(const Eigen::MatrixXd& s, double lambda,
                                       const GlassoOptions& options = {});

/// Subgradient-optimality residual of `theta` for the objective above.
/// With W = theta^{-1}: diagonal terms |W_ll - S_ll|; off-diagonal terms
/// |W_lk - S_lk - lambda * sign(theta_lk)| where theta_lk != 0, and the
/// excess max(0, |W_lk - S_lk| - lambda) where theta_lk = 0. Returns +inf
/// when theta has no Cholesky factorization.
[[nodiscard]] double kkt_residual(const Eigen::MatrixXd& s, double lambda,
                                  const Eigen::MatrixXd& theta);

}  // namespace layerdag
