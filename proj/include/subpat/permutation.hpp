#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "subpat/matrix.hpp"

namespace subpat {

/// Permutation in one-line notation, values 1..n.
class Permutation {
 public:
  /// Throws std::invalid_argument unless `values` is a permutation of 1..n, n >= 1.
  explicit Permutation(std::vector<int> values);

  /// Space-separated one-line notation ("5 2 1 6 3 4"). A single token of
  /// digits ("521634") is read digit by digit, which covers sizes up to 9.
  static Permutation parse(std::string_view text);

  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(values_.size()); }
  /// 1-based position.
  int operator()(int position) const noexcept { return values_[static_cast<std::size_t>(position - 1)]; }
  const std::vector<int>& values() const noexcept { return values_; }

  Permutation reversed() const;
  Permutation complemented() const;
  Permutation inverse() const;

  /// Space-separated one-line notation.
  std::string to_string() const;
  /// Digits run together, e.g. "521634"; only meaningful for n <= 9.
  std::string to_compact() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> values_;
};

/// M(i, j) = 1 iff i = sigma(j), rows counted from the bottom.
BinaryMatrix permutation_to_matrix(const Permutation& p);

/// Throws NotAPermutationMatrix unless `m` is square with one 1 per row and column.
Permutation matrix_to_permutation(const BinaryMatrix& m);

bool is_permutation_matrix(const BinaryMatrix& m) noexcept;

/// All permutations of size n in lexicographic order of one-line notation.
std::vector<Permutation> all_permutations(int n);

}  // namespace subpat
