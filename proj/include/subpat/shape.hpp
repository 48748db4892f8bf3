#pragma once

#include <span>

#include "subpat/matrix.hpp"

namespace subpat {

/// Nonempty, edge-connected set of 1-cells touching all four sides of the box.
bool is_polyomino(const BinaryMatrix& m) noexcept;

/// At most one 1 in every row and every column.
bool is_quasi_permutation(const BinaryMatrix& m) noexcept;

/// Number of 4-connected components of the 1-cells (rows bottom first).
int count_components(std::span<const RowWord> rows) noexcept;

}  // namespace subpat
