#include "layerdag/glasso.hpp"

#include <Eigen/Cholesky>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "layerdag/errors.hpp"

namespace layerdag {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double soft_threshold(double value, double penalty) {
  if (value > penalty) {
    return value - penalty;
  }
  if (value < -penalty) {
    return value + penalty;
  }
  return 0.0;
}

void check_input(const Eigen::MatrixXd& s, double lambda) {
  if (s.rows() != s.cols()) {
    throw std::invalid_argument("covariance matrix must be square");
  }
  if (lambda < 0.0) {
    throw std::invalid_argument("lambda must be nonnegative");
  }
  if (s.size() > 0) {
    const double asym = (s - s.transpose()).cwiseAbs().maxCoeff();
    const double scale = std::max(1.0, s.cwiseAbs().maxCoeff());
    if (asym > 1e-8 * scale) {
      throw std::invalid_argument("covariance matrix is not symmetric");
    }
  }
  for (int j = 0; j < s.rows(); ++j) {
    if (!(s(j, j) > 0.0)) {
      throw NumericalError("covariance diagonal entry " + std::to_string(j + 1) +
                           " is not positive; no positive definite precision exists");
    }
  }
  if (lambda == 0.0) {
    Eigen::LLT<Eigen::MatrixXd> llt(s);
    if (llt.info() != Eigen::Success) {
      throw NumericalError("lambda = 0 requires a positive definite covariance matrix");
    }
  }
}

// Recovers Theta from the working covariance and per-column lasso
// coefficients; returns false when a Schur complement is not positive.
bool recover_theta(const Eigen::MatrixXd& w, const Eigen::MatrixXd& beta,
                   Eigen::MatrixXd& theta) {
  const int q = static_cast<int>(w.rows());
  theta.resize(q, q);
  for (int j = 0; j < q; ++j) {
    double dot = 0.0;
    for (int k = 0; k < q; ++k) {
      if (k != j) {
        dot += w(k, j) * beta(k, j);
      }
    }
    const double denom = w(j, j) - dot;
    if (!(denom > 0.0) || !std::isfinite(denom)) {
      return false;
    }
    const double theta_jj = 1.0 / denom;
    theta(j, j) = theta_jj;
    for (int k = 0; k < q; ++k) {
      if (k != j) {
        theta(k, j) = -beta(k, j) * theta_jj;
      }
    }
  }
  theta = ((theta + theta.transpose()) / 2.0).eval();
  return true;
}

}  // namespace

double kkt_residual(const Eigen::MatrixXd& s, double lambda, const Eigen::MatrixXd& theta) {
  const int q = static_cast<int>(s.rows());
  Eigen::LLT<Eigen::MatrixXd> llt(theta);
  if (llt.info() != Eigen::Success) {
    return kInf;
  }
  const Eigen::MatrixXd w = llt.solve(Eigen::MatrixXd::Identity(q, q));
  double resid = 0.0;
  for (int l = 0; l < q; ++l) {
    resid = std::max(resid, std::abs(w(l, l) - s(l, l)));
    for (int k = 0; k < q; ++k) {
      if (k == l) {
        continue;
      }
      const double gap = w(l, k) - s(l, k);
      if (theta(l, k) == 0.0) {
        resid = std::max(resid, std::abs(gap) - lambda);
      } else {
        const double sign = theta(l, k) > 0.0 ? 1.0 : -1.0;
        resid = std::max(resid, std::abs(gap - lambda * sign));
      }
    }
  }
  return resid;
}

PrecisionEstimate glasso(const Eigen::MatrixXd& s, double lambda, const GlassoOptions& options) {
  check_input(s, lambda);
  const int q = static_cast<int>(s.rows());

  PrecisionEstimate result;
  result.lambda = lambda;
  result.node_labels.resize(q);
  for (int j = 0; j < q; ++j) {
    result.node_labels[j] = j + 1;
  }
  if (q == 0) {
    result.theta.resize(0, 0);
    result.converged = true;
    return result;
  }
  if (q == 1) {
    result.theta = Eigen::MatrixXd::Constant(1, 1, 1.0 / s(0, 0));
    result.converged = true;
    result.iterations = 0;
    result.kkt = 0.0;
    return result;
  }

  Eigen::MatrixXd w = s;                              // working covariance, diag fixed
  Eigen::MatrixXd beta = Eigen::MatrixXd::Zero(q, q); // column j: lasso coefficients
  Eigen::MatrixXd theta;
  Eigen::VectorXd t(q);  // t = W * beta.col(j) restricted to the active column

  const double diag_scale = s.diagonal().mean();
  const double inner_tol = std::max(options.tol * 1e-2 * diag_scale, 1e-14);
  const int max_inner = 200;

  double resid = kInf;
  int sweep = 0;
  for (; sweep < options.max_iter; ++sweep) {
    for (int j = 0; j < q; ++j) {
      t.noalias() = w * beta.col(j);
      for (int inner = 0; inner < max_inner; ++inner) {
        double max_delta = 0.0;
        for (int k = 0; k < q; ++k) {
          if (k == j) {
            continue;
          }
          const double old = beta(k, j);
          const double partial = s(k, j) - t(k) + w(k, k) * old;
          const double updated = soft_threshold(partial, lambda) / w(k, k);
          const double delta = updated - old;
          if (delta != 0.0) {
            beta(k, j) = updated;
            t.noalias() += w.col(k) * delta;
            max_delta = std::max(max_delta, std::abs(delta));
          }
        }
        if (max_delta <= inner_tol) {
          break;
        }
      }
      for (int k = 0; k < q; ++k) {
        if (k != j) {
          w(k, j) = t(k);
          w(j, k) = t(k);
        }
      }
    }
    if (!w.allFinite()) {
      break;
    }
    if (recover_theta(w, beta, theta)) {
      resid = kkt_residual(s, lambda, theta);
      if (resid <= options.tol) {
        ++sweep;
        break;
      }
    }
  }

  if (theta.size() == 0 || !theta.allFinite()) {
    // Degenerate solve; fall back to a diagonal estimate so callers always
    // receive a usable, clearly-flagged matrix.
    theta = Eigen::MatrixXd::Zero(q, q);
    for (int j = 0; j < q; ++j) {
      theta(j, j) = 1.0 / s(j, j);
    }
    resid = kkt_residual(s, lambda, theta);
  }
  result.theta = std::move(theta);
  result.converged = resid <= options.tol;
  result.iterations = sweep;
  result.kkt = resid;
  return result;
}

}  // namespace layerdag
