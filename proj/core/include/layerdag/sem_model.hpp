#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <vector>

#include "layerdag/dag.hpp"
#include "layerdag/dataset.hpp"
#include "layerdag/noise.hpp"
#include "layerdag/precision_estimate.hpp"

namespace layerdag {

/// Linear SEM over a DAG: x_k = sum_{j in pa_k} B(k,j) x_j + eps_k.
///
/// B is indexed (child, parent); its support must equal the transposed edge
/// set of the graph exactly, with every nonzero coefficient bounded away
/// from zero.
class SemModel {
 public:
  SemModel(Dag dag, Eigen::MatrixXd coefficients, std::vector<NoiseSpec> noise);

  [[nodiscard]] const Dag& dag() const { return dag_; }
  [[nodiscard]] const Eigen::MatrixXd& coefficients() const { return coefficients_; }
  [[nodiscard]] const std::vector<NoiseSpec>& noise() const { return noise_; }
  [[nodiscard]] int node_count() const { return dag_.node_count(); }

  /// (I - B)^{-1}: entry (k,j) is the total effect of node j on node k.
  [[nodiscard]] Eigen::MatrixXd total_effect() const;

  /// Closed-form covariance (I-B)^{-1} Omega (I-B)^{-T}.
  [[nodiscard]] Eigen::MatrixXd population_covariance() const;

  /// Closed-form precision (I-B)^T Omega^{-1} (I-B); exact, lambda = 0.
  [[nodiscard]] PrecisionEstimate population_precision() const;

  [[nodiscard]] std::string to_json() const;
  static SemModel from_json(const std::string& text);
  static SemModel load_json_file(const std::string& path);
  void save_json_file(const std::string& path) const;

 private:
  Dag dag_;
  Eigen::MatrixXd coefficients_;
  std::vector<NoiseSpec> noise_;
};

/// Edge weights drawn uniformly from [-hi,-lo] U [lo,hi], sign by fair coin.
/// Edges are visited in sorted order so the draw is reproducible.
[[nodiscard]] Eigen::MatrixXd sample_coefficients(const Dag& dag, double lo, double hi,
                                                  std::uint64_t seed);

/// i.i.d. rows x^T = eps^T (I-B)^{-T}. Columns are not centered; the noise
/// stream for cell (row, node) derives from (seed, row, node) so rows may be
/// generated in any order or in parallel.
[[nodiscard]] Dataset simulate(const SemModel& model, int n, std::uint64_t seed);

}  // namespace layerdag
