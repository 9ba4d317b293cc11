#pragma once

#include <string>
#include <vector>

#include "layerdag/rng.hpp"

namespace layerdag {

/// Continuous non-Gaussian noise law for one SEM node.
///
/// Supported laws and parameters:
///   uniform(a, b)          variance (b-a)^2 / 12
///   student-t(df)          integer df >= 3, variance df / (df-2)
///   laplace(loc, scale)    variance 2 * scale^2
///   scaled-uniform(sigma)  sigma * U[-3,3], variance 3 * sigma^2
class NoiseSpec {
 public:
  enum class Law { Uniform, StudentT, Laplace, ScaledUniform };

  static NoiseSpec uniform(double a, double b);
  static NoiseSpec student_t(int df);
  static NoiseSpec laplace(double loc, double scale);
  static NoiseSpec scaled_uniform(double sigma);

  [[nodiscard]] Law law() const { return law_; }
  [[nodiscard]] const std::vector<double>& params() const { return params_; }
  [[nodiscard]] double variance() const;
  [[nodiscard]] std::string law_name() const;

  /// One draw from the law.
  double sample(RngStream& stream) const;

  static NoiseSpec from_parts(const std::string& law_name, const std::vector<double>& params);

  friend bool operator==(const NoiseSpec&, const NoiseSpec&) = default;

 private:
  NoiseSpec(Law law, std::vector<double> params);

  Law law_;
  std::vector<double> params_;
};

}  // namespace layerdag
