#include "layerdag/sem_model.hpp"

#include <Eigen/LU>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "layerdag/errors.hpp"
#include "layerdag/rng.hpp"

namespace layerdag {

SemModel::SemModel(Dag dag, Eigen::MatrixXd coefficients, std::vector<NoiseSpec> noise)
    : dag_(std::move(dag)), coefficients_(std::move(coefficients)), noise_(std::move(noise)) {
  const int p = dag_.node_count();
  if (coefficients_.rows() != p || coefficients_.cols() != p) {
    throw std::invalid_argument("coefficient matrix must be " + std::to_string(p) + "x" +
                                std::to_string(p));
  }
  if (static_cast<int>(noise_.size()) != p) {
    throw std::invalid_argument("expected one noise spec per node");
  }
  for (int child = 1; child <= p; ++child) {
    for (int parent = 1; parent <= p; ++parent) {
      const double beta = coefficients_(child - 1, parent - 1);
      const bool edge = dag_.has_edge(parent, child);
      if (edge && beta == 0.0) {
        throw StructuralError("edge " + std::to_string(parent) + " -> " +
                              std::to_string(child) + " carries a zero coefficient");
      }
      if (!edge && beta != 0.0) {
        throw StructuralError("nonzero coefficient for absent edge " +
                              std::to_string(parent) + " -> " + std::to_string(child));
      }
    }
  }
}

Eigen::MatrixXd SemModel::total_effect() const {
  const int p = node_count();
  const Eigen::MatrixXd i_minus_b =
      Eigen::MatrixXd::Identity(p, p) - coefficients_;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(i_minus_b);
  // det(I-B) = 1 for any DAG; singularity here means corrupted state.
  const Eigen::MatrixXd inverse = lu.inverse();
  if (!inverse.allFinite()) {
    throw StructuralError("(I - B) is singular; coefficient matrix is not acyclic");
  }
  return inverse;
}

Eigen::MatrixXd SemModel::population_covariance() const {
  const int p = node_count();
  Eigen::VectorXd variances(p);
  for (int k = 0; k < p; ++k) {
    variances(k) = noise_[k].variance();
  }
  const Eigen::MatrixXd a = total_effect();
  return a * variances.asDiagonal() * a.transpose();
}

PrecisionEstimate SemModel::population_precision() const {
  const int p = node_count();
  Eigen::VectorXd inv_variances(p);
  for (int k = 0; k < p; ++k) {
    inv_variances(k) = 1.0 / noise_[k].variance();
  }
  const Eigen::MatrixXd i_minus_b =
      Eigen::MatrixXd::Identity(p, p) - coefficients_;
  PrecisionEstimate est;
  est.theta = i_minus_b.transpose() * inv_variances.asDiagonal() * i_minus_b;
  // The closed form is symmetric in exact arithmetic; make it so in floats.
  est.theta = ((est.theta + est.theta.transpose()) / 2.0).eval();
  est.lambda = 0.0;
  est.node_labels.resize(p);
  for (int k = 0; k < p; ++k) {
    est.node_labels[k] = k + 1;
  }
  return est;
}

std::string SemModel::to_json() const {
  nlohmann::json doc;
  doc["p"] = node_count();
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : dag_.edges()) {
    edges.push_back({e.parent, e.child, coefficients_(e.child - 1, e.parent - 1)});
  }
  doc["edges"] = edges;
  nlohmann::json noise = nlohmann::json::array();
  for (const NoiseSpec& spec : noise_) {
    noise.push_back({{"law", spec.law_name()}, {"params", spec.params()}});
  }
  doc["noise"] = noise;
  return doc.dump(2);
}

SemModel SemModel::from_json(const std::string& text) {
  const nlohmann::json doc = nlohmann::json::parse(text);
  const int p = doc.at("p").get<int>();
  std::vector<Edge> edges;
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(p, p);
  for (const auto& entry : doc.at("edges")) {
    const int parent = entry.at(0).get<int>();
    const int child = entry.at(1).get<int>();
    if (parent < 1 || parent > p || child < 1 || child > p) {
      throw IoError("model edge [" + std::to_string(parent) + "," + std::to_string(child) +
                    "] outside 1.." + std::to_string(p));
    }
    edges.push_back({parent, child});
    b(child - 1, parent - 1) = entry.at(2).get<double>();
  }
  std::vector<NoiseSpec> noise;
  for (const auto& entry : doc.at("noise")) {
    noise.push_back(NoiseSpec::from_parts(entry.at("law").get<std::string>(),
                                          entry.at("params").get<std::vector<double>>()));
  }
  return SemModel(Dag(p, std::move(edges)), std::move(b), std::move(noise));
}

SemModel SemModel::load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open '" + path + "' for reading");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return from_json(buffer.str());
}

void SemModel::save_json_file(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  out << to_json() << '\n';
  if (!out) {
    throw IoError("write failed for '" + path + "'");
  }
}

Eigen::MatrixXd sample_coefficients(const Dag& dag, double lo, double hi,
                                    std::uint64_t seed) {
  if (!(0.0 < lo && lo < hi)) {
    throw std::invalid_argument("coefficient interval requires 0 < lo < hi");
  }
  const int p = dag.node_count();
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(p, p);
  RngStream stream(seed);
  for (const Edge& e : dag.edges()) {
    const double magnitude = stream.uniform(lo, hi);
    const bool negative = (stream.next_u64() >> 63) != 0;
    b(e.child - 1, e.parent - 1) = negative ? -magnitude : magnitude;
  }
  return b;
}

Dataset simulate(const SemModel& model, int n, std::uint64_t seed) {
  if (n < 0) {
    throw std::invalid_argument("sample size must be nonnegative");
  }
  const int p = model.node_count();
  Eigen::MatrixXd noise(n, p);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < p; ++k) {
      RngStream cell(derive_seed(seed, static_cast<std::uint64_t>(i),
                                 static_cast<std::uint64_t>(k)));
      noise(i, k) = model.noise()[k].sample(cell);
    }
  }
  const Eigen::MatrixXd a = model.total_effect();
  Dataset ds = Dataset::with_default_labels(noise * a.transpose());
  return ds;
}

}  // namespace layerdag
