#pragma once

#include <stdexcept>
#include <string>

namespace layerdag {

/// Graph- or model-structure violation (cycles, label gaps, support mismatch).
class StructuralError : public std::runtime_error {
 public:
  explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical failure (singular matrix, non-positive-definite precision).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// File and format problems; messages carry row/column context where known.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace layerdag
