#include "layerdag/dataset.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include "layerdag/csv.hpp"
#include "layerdag/errors.hpp"

namespace layerdag {

void Dataset::validate() const {
  if (static_cast<int>(columns.size()) != p()) {
    throw std::invalid_argument("dataset has " + std::to_string(p()) + " columns but " +
                                std::to_string(columns.size()) + " labels");
  }
}

Dataset Dataset::with_default_labels(Eigen::MatrixXd values) {
  Dataset ds;
  ds.values = std::move(values);
  ds.columns.reserve(ds.p());
  for (int j = 1; j <= ds.p(); ++j) {
    ds.columns.push_back("x" + std::to_string(j));
  }
  return ds;
}

Dataset read_dataset_csv(const std::string& path) {
  const auto rows = read_csv_file(path);
  if (rows.empty()) {
    throw IoError(path + ": missing header row");
  }
  Dataset ds;
  ds.columns = rows[0];
  const int p = static_cast<int>(ds.columns.size());
  const int n = static_cast<int>(rows.size()) - 1;
  ds.values.resize(n, p);
  for (int i = 0; i < n; ++i) {
    const auto& row = rows[i + 1];
    if (static_cast<int>(row.size()) != p) {
      throw IoError(path + ": row " + std::to_string(i + 2) + " has " +
                    std::to_string(row.size()) + " fields, expected " + std::to_string(p));
    }
    for (int j = 0; j < p; ++j) {
      const std::string& cell = row[j];
      char* end = nullptr;
      const double value = std::strtod(cell.c_str(), &end);
      if (cell.empty() || end == cell.c_str() || *end != '\0') {
        throw IoError(path + ": row " + std::to_string(i + 2) + ", column " +
                      std::to_string(j + 1) + ": not a number: '" + cell + "'");
      }
      ds.values(i, j) = value;
    }
  }
  return ds;
}

void write_dataset_csv(const std::string& path, const Dataset& dataset) {
  dataset.validate();
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  write_csv_row(out, dataset.columns);
  std::vector<std::string> row(dataset.p());
  for (int i = 0; i < dataset.n(); ++i) {
    for (int j = 0; j < dataset.p(); ++j) {
      row[j] = format_double(dataset.values(i, j));
    }
    write_csv_row(out, row);
  }
  if (!out) {
    throw IoError("write failed for '" + path + "'");
  }
}

Eigen::MatrixXd centered(const Eigen::MatrixXd& values) {
  if (values.rows() == 0) {
    return values;
  }
  return values.rowwise() - values.colwise().mean();
}

}  // namespace layerdag
