#include "layerdag/covariance.hpp"

#include <cmath>
#include <stdexcept>

namespace layerdag {

Eigen::MatrixXd empirical_covariance(const Eigen::MatrixXd& values) {
  const int n = static_cast<int>(values.rows());
  if (n < 2) {
    throw std::invalid_argument("empirical covariance requires n >= 2, got n = " +
                                std::to_string(n));
  }
  const Eigen::MatrixXd xc = centered(values);
  Eigen::MatrixXd s = (xc.transpose() * xc) / static_cast<double>(n);
  return ((s + s.transpose()) / 2.0).eval();
}

Eigen::MatrixXd empirical_covariance(const Dataset& dataset, const std::vector<int>& subset) {
  Eigen::MatrixXd selected(dataset.n(), static_cast<int>(subset.size()));
  for (std::size_t j = 0; j < subset.size(); ++j) {
    const int label = subset[j];
    if (label < 1 || label > dataset.p()) {
      throw std::invalid_argument("subset label " + std::to_string(label) +
                                  " outside dataset columns 1.." + std::to_string(dataset.p()));
    }
    selected.col(static_cast<int>(j)) = dataset.values.col(label - 1);
  }
  return empirical_covariance(selected);
}

double lambda_schedule(int q, int n, double c) {
  if (q < 1) {
    throw std::invalid_argument("scope size must be >= 1");
  }
  if (n < 2) {
    throw std::invalid_argument("sample size must be >= 2");
  }
  if (!(c > 0.0)) {
    throw std::invalid_argument("schedule constant must be positive");
  }
  const double m = static_cast<double>(std::max(q, n));
  return c * std::sqrt(std::log(m) / static_cast<double>(n));
}

}  // namespace layerdag
