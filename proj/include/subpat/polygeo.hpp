#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "subpat/matrix.hpp"
#include "subpat/permutation.hpp"

namespace subpat {

/// Every row (resp. column) of 1s is an interval.
bool is_h_convex(const BinaryMatrix& p) noexcept;
bool is_v_convex(const BinaryMatrix& p) noexcept;
bool is_convex(const BinaryMatrix& p) noexcept;

/// Some cell reaches every cell through north and east steps inside p.
bool is_directed(const BinaryMatrix& p);
bool is_directed_convex(const BinaryMatrix& p);

/// The outer boundary, traced counterclockwise from the bottom-left corner,
/// is an east/north path to the top-right corner followed by a west/south
/// path back, and the cells are exactly the ones it encloses.
bool is_parallelogram(const BinaryMatrix& p);

/// Smallest k such that any two cells are joined by a monotone path inside
/// p with at most k changes of direction; nullopt unless p is convex.
std::optional<int> convexity_degree(const BinaryMatrix& p);

struct Projections {
  /// Bottom row first.
  std::vector<int> row_sums;
  std::vector<int> col_sums;

  bool operator==(const Projections&) const = default;
};

Projections projections(const BinaryMatrix& m);

/// No other matrix of the same shape has the same projections. Exhaustive;
/// throws BudgetExceeded beyond 5 x 5.
bool is_unique_for_projections(const BinaryMatrix& m);

/// Every two rows, and every two columns, are nested as sets of cells.
bool rows_columns_comparable(const BinaryMatrix& p) noexcept;

/// Avoids the isolated-in-column and isolated-in-row patterns.
bool in_c_prime(const BinaryMatrix& p);
/// Every maximal run of 1s in a row or column reaches the bounding box.
bool boundary_contact(const BinaryMatrix& p) noexcept;

/// Each 1 of the permutation matrix becomes the block [11;10], each 0 the
/// full 2 x 2 block (top row first).
BinaryMatrix embed_permutation_in_c_prime(const Permutation& p);

/// Convex polyominoes of one rank, in generation order.
void for_each_convex_polyomino(int rank, const std::function<void(const BinaryMatrix&)>& visit);

struct WitnessPair {
  BinaryMatrix host;
  BinaryMatrix sub;
};

/// A directed polyomino with a non-directed polyomino submatrix.
std::optional<WitnessPair> find_directed_non_class_witness(int max_rank);

/// A polyomino of convexity degree at most 2 with a polyomino submatrix of degree 3.
std::optional<WitnessPair> find_two_convex_non_class_witness(int max_rank);

/// Smallest convex polyomino (up to max_rank) containing m.
std::optional<BinaryMatrix> find_convex_host(const BinaryMatrix& m, int max_rank);

}  // namespace subpat
