#pragma once

#include "thicket/algebra/poly_matrix.hpp"

namespace thicket {

/// Generators of a kernel: each column is a syzygy, `degrees` are their
/// degrees in the source free module.
struct SyzygyResult {
  PolyMatrix matrix;
  FreeModuleSpec degrees;
};

/// Kernel of the graded map F(column_degrees) -> F(row_degrees) given by `m`,
/// where entry (i, j) must be zero or homogeneous of degree
/// column_degrees[j] - row_degrees[i]. The columns returned generate the
/// kernel (not necessarily minimally). Throws InputError on inhomogeneity.
SyzygyResult module_syzygies(const PolyMatrix& m, const FreeModuleSpec& row_degrees,
                             const FreeModuleSpec& column_degrees);

}  // namespace thicket
