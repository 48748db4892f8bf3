#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "subpat/matrix.hpp"

namespace subpat {

/// The four universes elements are drawn from.
enum class GroundSet { Permutations, Polyominoes, BinaryMatrices, QuasiPermutationMatrices };

std::string_view to_string(GroundSet g) noexcept;
/// Accepts "perm", "poly", "matrix", "quasi" and the long names.
std::optional<GroundSet> parse_ground_set(std::string_view text) noexcept;

/// Smallest rank present in the ground set: 1 for permutations, 2 otherwise.
int min_rank(GroundSet g) noexcept;
/// Permutations are graded by size; everything else by rows + cols.
int rank_of(GroundSet g, const BinaryMatrix& m) noexcept;
bool in_ground_set(GroundSet g, const BinaryMatrix& m) noexcept;

using Visitor = std::function<void(const BinaryMatrix&)>;

/// Called on the top rows of a partially built matrix (row words bottom row
/// first). Returning true discards every completion of that prefix. Any
/// completion contains the prefix as a submatrix, so avoidance tests are
/// exact prefix filters.
using PrefixFilter = std::function<bool(std::span<const RowWord> top_rows, int cols)>;

struct GenerateOptions {
  /// Worker threads; 1 streams results directly to the visitor.
  int shards = 1;
  PrefixFilter prune;
};

/// Visits every element of rank `rank` exactly once, ordered by rows and
/// then by the top-row-first bit string. The order does not depend on
/// `shards`: shards split the first-row choices into contiguous blocks and
/// their output is replayed block by block.
void for_each_element(GroundSet g, int rank, const Visitor& visit, const GenerateOptions& opts = {});

/// Elements of one rows x cols box, in the same order. Permutations need rows == cols.
void for_each_in_box(GroundSet g, int rows, int cols, const Visitor& visit, const GenerateOptions& opts = {});

std::vector<BinaryMatrix> generate(GroundSet g, int rank, const GenerateOptions& opts = {});

/// Ranks min_rank(g)..rmax, rank ascending.
std::vector<BinaryMatrix> generate_upto(GroundSet g, int rmax, const GenerateOptions& opts = {});

/// Number of elements of rank `rank` passing `accept` (all when empty).
/// `accept` runs on worker threads and must be safe to call concurrently.
std::uint64_t count_elements(GroundSet g, int rank, const std::function<bool(const BinaryMatrix&)>& accept = {},
                             const GenerateOptions& opts = {});

/// Elements of `s` that do not strictly contain another element of `s`,
/// in canonical order.
std::vector<BinaryMatrix> minimal_elements(std::span<const BinaryMatrix> s);

/// No element contains a different element.
bool is_antichain(std::span<const BinaryMatrix> s);

/// Ground-set elements one rank below `m` that it contains: one row or one
/// column deleted (one point for permutations). Sorted, without duplicates.
std::vector<BinaryMatrix> lower_covers(GroundSet g, const BinaryMatrix& m);

/// Every proper submatrix of `m` lying in the ground set, sorted and without
/// duplicates. Exhaustive over row and column subsets.
std::vector<BinaryMatrix> proper_subelements(GroundSet g, const BinaryMatrix& m);

}  // namespace subpat
