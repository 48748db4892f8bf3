#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace subpat {

using RowWord = std::uint64_t;

/// Rectangular 0/1 grid.
///
/// Rows are numbered from the bottom: row 1 is the bottom row and column 1
/// is the leftmost column. Internally each row is one machine word with bit
/// (j - 1) holding column j, stored bottom row first. Text serialization
/// goes the other way round (top row first) so that printed matrices look
/// like the drawings they describe.
class BinaryMatrix {
 public:
  static constexpr int kMaxCols = 64;

  /// All-zero matrix. Both dimensions must be at least 1.
  BinaryMatrix(int rows, int cols);

  /// Builds from row words listed bottom row first.
  BinaryMatrix(int cols, std::vector<RowWord> rows_bottom_up);

  /// Rows given as '0'/'1' strings, top row first.
  static BinaryMatrix from_rows(std::initializer_list<std::string_view> top_down);
  static BinaryMatrix from_rows(std::span<const std::string> top_down);

  /// Parses the text format: '0'/'1' lines, top row first.
  static BinaryMatrix parse(std::string_view text);

  int rows() const noexcept { return static_cast<int>(rows_.size()); }
  int cols() const noexcept { return cols_; }
  /// Semi-perimeter of the bounding box.
  int rank() const noexcept { return rows() + cols_; }

  /// 1-based, bottom-up coordinates.
  bool at(int row, int col) const noexcept {
    return (rows_[static_cast<std::size_t>(row - 1)] >> (col - 1)) & 1U;
  }
  void set(int row, int col, bool value = true) noexcept;

  /// Row words, bottom row first.
  std::span<const RowWord> row_words() const noexcept { return rows_; }
  RowWord row_word(int row) const noexcept { return rows_[static_cast<std::size_t>(row - 1)]; }
  RowWord full_row_mask() const noexcept;

  int ones() const noexcept;
  std::vector<int> row_sums() const;
  std::vector<int> col_sums() const;

  BinaryMatrix transposed() const;
  /// Selects rows and columns by 1-based indices (bottom-up for rows).
  BinaryMatrix submatrix(std::span<const int> rows, std::span<const int> cols) const;
  BinaryMatrix without_row(int row) const;
  BinaryMatrix without_col(int col) const;
  /// Mirror image top to bottom.
  BinaryMatrix flipped_vertically() const;
  /// Mirror image left to right.
  BinaryMatrix flipped_horizontally() const;

  /// Text serialization without trailing newline.
  std::string to_text() const;

  bool operator==(const BinaryMatrix&) const = default;

  /// Canonical order: rank, then rows, then the top-first bit string.
  std::strong_ordering operator<=>(const BinaryMatrix& other) const noexcept;

 private:
  int cols_;
  std::vector<RowWord> rows_;
};

std::ostream& operator<<(std::ostream& os, const BinaryMatrix& m);

struct BinaryMatrixHash {
  std::size_t operator()(const BinaryMatrix& m) const noexcept;
};

/// Parses a file body holding several matrices separated by blank lines.
std::vector<BinaryMatrix> parse_matrix_list(std::string_view text);
/// Inverse of parse_matrix_list; every matrix is newline-terminated.
std::string format_matrix_list(std::span<const BinaryMatrix> ms);

/// Reverses the low `width` bits of `w`.
RowWord reverse_bits(RowWord w, int width) noexcept;

inline RowWord low_mask(int width) noexcept {
  return width >= 64 ? ~RowWord{0} : ((RowWord{1} << width) - 1);
}

}  // namespace subpat
