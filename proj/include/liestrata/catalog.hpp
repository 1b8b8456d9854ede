#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liestrata/algebra.hpp"
#include "liestrata/matrixlie.hpp"

namespace liestrata {

/// A built-in algebra: abstract structure constants plus the matrix
/// realization where one exists.
struct CatalogEntry {
  std::string name;
  long param = 0;  // n where applicable, 0 otherwise
  LieAlgebra algebra;
  std::optional<MatrixRealization> realization;
  std::string note;
};

/// Constructs one of: gl(n), sl(n), so(n), sp(2n) [param n], su(n),
/// aff1, heisenberg(n) [n = odd total dimension], duflo.
CatalogEntry catalog_make(const std::string& name, long n = 0);

std::vector<std::string> catalog_names();

}  // namespace liestrata
