#include "layerdag/precision_estimate.hpp"

#include <Eigen/Cholesky>
#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "layerdag/errors.hpp"

namespace layerdag {

int PrecisionEstimate::index_of(int label) const {
  const auto it = std::find(node_labels.begin(), node_labels.end(), label);
  if (it == node_labels.end()) {
    throw std::invalid_argument("node " + std::to_string(label) +
                                " is not in the precision matrix scope");
  }
  return static_cast<int>(it - node_labels.begin());
}

void PrecisionEstimate::validate() const {
  if (theta.rows() != theta.cols()) {
    throw NumericalError("precision matrix is not square");
  }
  if (static_cast<int>(node_labels.size()) != size()) {
    throw NumericalError("precision matrix labels do not match its dimension");
  }
  const double asym = (theta - theta.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-10) {
    throw NumericalError("precision matrix asymmetry " + std::to_string(asym) +
                         " exceeds 1e-10");
  }
  Eigen::LLT<Eigen::MatrixXd> llt(theta);
  if (llt.info() != Eigen::Success) {
    throw NumericalError("precision matrix is not positive definite");
  }
}

std::string PrecisionEstimate::to_json() const {
  nlohmann::json doc;
  doc["labels"] = node_labels;
  doc["lambda"] = lambda;
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(theta.size()));
  for (int i = 0; i < theta.rows(); ++i) {
    for (int j = 0; j < theta.cols(); ++j) {
      values.push_back(theta(i, j));
    }
  }
  doc["theta"] = values;
  doc["converged"] = converged;
  return doc.dump(2);
}

PrecisionEstimate PrecisionEstimate::from_json(const std::string& text) {
  const nlohmann::json doc = nlohmann::json::parse(text);
  PrecisionEstimate est;
  est.node_labels = doc.at("labels").get<std::vector<int>>();
  est.lambda = doc.at("lambda").get<double>();
  est.converged = doc.at("converged").get<bool>();
  const auto values = doc.at("theta").get<std::vector<double>>();
  const int q = static_cast<int>(est.node_labels.size());
  if (static_cast<int>(values.size()) != q * q) {
    throw IoError("precision JSON holds " + std::to_string(values.size()) +
                  " values for a " + std::to_string(q) + "-node scope");
  }
  est.theta.resize(q, q);
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q; ++j) {
      est.theta(i, j) = values[static_cast<std::size_t>(i) * q + j];
    }
  }
  return est;
}

}  // namespace layerdag
