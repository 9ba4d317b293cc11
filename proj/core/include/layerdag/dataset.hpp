#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

namespace layerdag {

/// Observation matrix: rows are samples, columns are labeled variables.
struct Dataset {
  Eigen::MatrixXd values;            // n x p
  std::vector<std::string> columns;  // size p

  [[nodiscard]] int n() const { return static_cast<int>(values.rows()); }
  [[nodiscard]] int p() const { return static_cast<int>(values.cols()); }

  void validate() const;

  /// Default labels x1..xp.
  static Dataset with_default_labels(Eigen::MatrixXd values);
};

/// Reads a CSV with a mandatory header row; every cell must parse as a
/// number. Ragged or non-numeric input raises IoError with row/column context.
[[nodiscard]] Dataset read_dataset_csv(const std::string& path);

void write_dataset_csv(const std::string& path, const Dataset& dataset);

/// Column means subtracted; returns the centered copy.
[[nodiscard]] Eigen::MatrixXd centered(const Eigen::MatrixXd& values);

}  // namespace layerdag
