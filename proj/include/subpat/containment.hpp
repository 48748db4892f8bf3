#pragma once

#include <optional>
#include <span>
#include <vector>

#include "subpat/matrix.hpp"

namespace subpat {

/// Selected host rows and columns (1-based, strictly increasing) whose
/// intersection equals the pattern cell for cell.
struct Embedding {
  std::vector<int> rows;
  std::vector<int> cols;

  bool operator==(const Embedding&) const = default;
};

/// Submatrix order: true iff `pattern` is obtained from `host` by deleting
/// rows and/or columns. Zeros must match as well as ones.
bool contains(const BinaryMatrix& host, const BinaryMatrix& pattern);

/// A witness for `contains`, or nullopt.
std::optional<Embedding> find_embedding(const BinaryMatrix& host, const BinaryMatrix& pattern);

/// Direct cell-by-cell check of a claimed embedding.
bool is_valid_embedding(const BinaryMatrix& host, const BinaryMatrix& pattern, const Embedding& e);

/// Same search over raw row words (bottom row first). Used by generators to
/// test partially built matrices without materializing them.
bool contains_rows(std::span<const RowWord> host, int host_cols, std::span<const RowWord> pattern,
                   int pattern_cols, Embedding* witness = nullptr);

}  // namespace subpat
