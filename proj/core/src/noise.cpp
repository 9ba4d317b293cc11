#include "layerdag/noise.hpp"

#include <cmath>
#include <stdexcept>

namespace layerdag {

NoiseSpec::NoiseSpec(Law law, std::vector<double> params)
    : law_(law), params_(std::move(params)) {}

NoiseSpec NoiseSpec::uniform(double a, double b) {
  if (!(a < b)) {
    throw std::invalid_argument("uniform noise requires a < b");
  }
  return NoiseSpec(Law::Uniform, {a, b});
}

NoiseSpec NoiseSpec::student_t(int df) {
  if (df < 3) {
    throw std::invalid_argument("student-t noise requires df >= 3 for finite variance");
  }
  return NoiseSpec(Law::StudentT, {static_cast<double>(df)});
}

NoiseSpec NoiseSpec::laplace(double loc, double scale) {
  if (!(scale > 0.0)) {
    throw std::invalid_argument("laplace noise requires scale > 0");
  }
  return NoiseSpec(Law::Laplace, {loc, scale});
}

NoiseSpec NoiseSpec::scaled_uniform(double sigma) {
  if (!(sigma > 0.0)) {
    throw std::invalid_argument("scaled-uniform noise requires sigma > 0");
  }
  return NoiseSpec(Law::ScaledUniform, {sigma});
}

double NoiseSpec::variance() const {
  switch (law_) {
    case Law::Uniform: {
      const double width = params_[1] - params_[0];
      return width * width / 12.0;
    }
    case Law::StudentT: {
      const double df = params_[0];
      return df / (df - 2.0);
    }
    case Law::Laplace:
      return 2.0 * params_[1] * params_[1];
    case Law::ScaledUniform:
      return 3.0 * params_[0] * params_[0];
  }
  throw std::logic_error("unreachable noise law");
}

std::string NoiseSpec::law_name() const {
  switch (law_) {
    case Law::Uniform:
      return "uniform";
    case Law::StudentT:
      return "student-t";
    case Law::Laplace:
      return "laplace";
    case Law::ScaledUniform:
      return "scaled-uniform";
  }
  throw std::logic_error("unreachable noise law");
}

double NoiseSpec::sample(RngStream& stream) const {
  switch (law_) {
    case Law::Uniform:
      return stream.uniform(params_[0], params_[1]);
    case Law::StudentT: {
      const int df = static_cast<int>(params_[0]);
      const double z = stream.normal();
      double chi_sq = 0.0;
      for (int i = 0; i < df; ++i) {
        const double g = stream.normal();
        chi_sq += g * g;
      }
      return z / std::sqrt(chi_sq / static_cast<double>(df));
    }
    case Law::Laplace: {
      // Inverse CDF on (0,1); open interval keeps the logs finite.
      const double u = stream.uniform01_open();
      if (u < 0.5) {
        return params_[0] + params_[1] * std::log(2.0 * u);
      }
      return params_[0] - params_[1] * std::log(2.0 * (1.0 - u));
    }
    case Law::ScaledUniform:
      return params_[0] * stream.uniform(-3.0, 3.0);
  }
  throw std::logic_error("unreachable noise law");
}

NoiseSpec NoiseSpec::from_parts(const std::string& law_name,
                                const std::vector<double>& params) {
  const auto expect = [&](std::size_t count) {
    if (params.size() != count) {
      throw std::invalid_argument("noise law '" + law_name + "' expects " +
                                  std::to_string(count) + " parameter(s), got " +
                                  std::to_string(params.size()));
    }
  };
  if (law_name == "uniform") {
    expect(2);
    return uniform(params[0], params[1]);
  }
  if (law_name == "student-t") {
    expect(1);
    return student_t(static_cast<int>(params[0]));
  }
  if (law_name == "laplace") {
    expect(2);
    return laplace(params[0], params[1]);
  }
  if (law_name == "scaled-uniform") {
    expect(1);
    return scaled_uniform(params[0]);
  }
  throw std::invalid_argument("unknown noise law '" + law_name + "'");
}

}  // namespace layerdag
