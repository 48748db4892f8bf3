#include "subpat/matrix.hpp"

#include <algorithm>
#include <bit>
#include <ostream>

#include "subpat/errors.hpp"

namespace subpat {

namespace {

void check_dims(int rows, int cols) {
  if (rows < 1 || cols < 1) {
    throw std::invalid_argument("matrix dimensions must be at least 1x1");
  }
  if (cols > BinaryMatrix::kMaxCols) {
    throw std::invalid_argument("matrix has more than 64 columns");
  }
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

}  // namespace

RowWord reverse_bits(RowWord w, int width) noexcept {
  RowWord r = 0;
  for (int i = 0; i < width; ++i) {
    r = (r << 1) | ((w >> i) & 1U);
  }
  return r;
}

BinaryMatrix::BinaryMatrix(int rows, int cols) : cols_(cols) {
  check_dims(rows, cols);
  rows_.assign(static_cast<std::size_t>(rows), 0);
}

BinaryMatrix::BinaryMatrix(int cols, std::vector<RowWord> rows_bottom_up)
    : cols_(cols), rows_(std::move(rows_bottom_up)) {
  check_dims(static_cast<int>(rows_.size()), cols);
  const RowWord mask = low_mask(cols);
  for (auto w : rows_) {
    if (w & ~mask) throw std::invalid_argument("row word has bits beyond the column count");
  }
}

BinaryMatrix BinaryMatrix::from_rows(std::initializer_list<std::string_view> top_down) {
  std::vector<std::string> copy(top_down.begin(), top_down.end());
  return from_rows(std::span<const std::string>(copy));
}

BinaryMatrix BinaryMatrix::from_rows(std::span<const std::string> top_down) {
  if (top_down.empty()) throw ParseError("matrix has no rows");
  const auto cols = static_cast<int>(top_down.front().size());
  if (cols == 0) throw ParseError("matrix row is empty");
  if (cols > kMaxCols) throw ParseError("matrix has more than 64 columns");
  std::vector<RowWord> words(top_down.size(), 0);
  for (std::size_t i = 0; i < top_down.size(); ++i) {
    const auto& line = top_down[i];
    if (static_cast<int>(line.size()) != cols) throw ParseError("ragged matrix rows");
    RowWord w = 0;
    for (int j = 0; j < cols; ++j) {
      const char ch = line[static_cast<std::size_t>(j)];
      if (ch == '1') {
        w |= RowWord{1} << j;
      } else if (ch != '0') {
        throw ParseError(std::string("unexpected character '") + ch + "' in matrix");
      }
    }
    words[top_down.size() - 1 - i] = w;
  }
  return BinaryMatrix(cols, std::move(words));
}

BinaryMatrix BinaryMatrix::parse(std::string_view text) {
  std::vector<std::string> lines;
  for (auto line : split_lines(text)) {
    if (!line.empty()) lines.emplace_back(line);
  }
  return from_rows(std::span<const std::string>(lines));
}

void BinaryMatrix::set(int row, int col, bool value) noexcept {
  auto& w = rows_[static_cast<std::size_t>(row - 1)];
  const RowWord bit = RowWord{1} << (col - 1);
  w = value ? (w | bit) : (w & ~bit);
}

RowWord BinaryMatrix::full_row_mask() const noexcept { return low_mask(cols_); }

int BinaryMatrix::ones() const noexcept {
  int n = 0;
  for (auto w : rows_) n += std::popcount(w);
  return n;
}

std::vector<int> BinaryMatrix::row_sums() const {
  std::vector<int> sums;
  sums.reserve(rows_.size());
  for (auto w : rows_) sums.push_back(std::popcount(w));
  return sums;
}

std::vector<int> BinaryMatrix::col_sums() const {
  std::vector<int> sums(static_cast<std::size_t>(cols_), 0);
  for (auto w : rows_) {
    for (int j = 0; j < cols_; ++j) sums[static_cast<std::size_t>(j)] += static_cast<int>((w >> j) & 1U);
  }
  return sums;
}

BinaryMatrix BinaryMatrix::transposed() const {
  BinaryMatrix t(cols_, rows());
  for (int i = 1; i <= rows(); ++i) {
    for (int j = 1; j <= cols_; ++j) {
      if (at(i, j)) t.set(j, i);
    }
  }
  return t;
}

BinaryMatrix BinaryMatrix::submatrix(std::span<const int> rows, std::span<const int> cols) const {
  std::vector<RowWord> words;
  words.reserve(rows.size());
  for (int r : rows) {
    const RowWord src = row_word(r);
    RowWord w = 0;
    for (std::size_t k = 0; k < cols.size(); ++k) {
      w |= ((src >> (cols[k] - 1)) & 1U) << k;
    }
    words.push_back(w);
  }
  return BinaryMatrix(static_cast<int>(cols.size()), std::move(words));
}

BinaryMatrix BinaryMatrix::without_row(int row) const {
  auto words = rows_;
  words.erase(words.begin() + (row - 1));
  return BinaryMatrix(cols_, std::move(words));
}

BinaryMatrix BinaryMatrix::without_col(int col) const {
  const RowWord low = low_mask(col - 1);
  std::vector<RowWord> words;
  words.reserve(rows_.size());
  for (auto w : rows_) words.push_back((w & low) | ((w >> col) << (col - 1)));
  return BinaryMatrix(cols_ - 1, std::move(words));
}

BinaryMatrix BinaryMatrix::flipped_vertically() const {
  auto words = rows_;
  std::reverse(words.begin(), words.end());
  return BinaryMatrix(cols_, std::move(words));
}

BinaryMatrix BinaryMatrix::flipped_horizontally() const {
  std::vector<RowWord> words;
  words.reserve(rows_.size());
  for (auto w : rows_) words.push_back(reverse_bits(w, cols_));
  return BinaryMatrix(cols_, std::move(words));
}

std::string BinaryMatrix::to_text() const {
  std::string out;
  out.reserve(static_cast<std::size_t>(rows() * (cols_ + 1)));
  for (int i = rows(); i >= 1; --i) {
    for (int j = 1; j <= cols_; ++j) out.push_back(at(i, j) ? '1' : '0');
    if (i > 1) out.push_back('\n');
  }
  return out;
}

std::strong_ordering BinaryMatrix::operator<=>(const BinaryMatrix& other) const noexcept {
  if (auto c = rank() <=> other.rank(); c != 0) return c;
  if (auto c = rows() <=> other.rows(); c != 0) return c;
  // Same rank and rows means same shape; compare top row first, column 1 first.
  for (std::size_t k = rows_.size(); k-- > 0;) {
    const RowWord diff = rows_[k] ^ other.rows_[k];
    if (diff != 0) {
      const RowWord first = diff & (~diff + 1);
      return (rows_[k] & first) ? std::strong_ordering::greater : std::strong_ordering::less;
    }
  }
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const BinaryMatrix& m) { return os << m.to_text(); }

std::size_t BinaryMatrixHash::operator()(const BinaryMatrix& m) const noexcept {
  std::uint64_t h = 1469598103934665603ULL ^ static_cast<std::uint64_t>(m.cols());
  for (auto w : m.row_words()) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

std::vector<BinaryMatrix> parse_matrix_list(std::string_view text) {
  std::vector<BinaryMatrix> out;
  std::vector<std::string> block;
  auto flush = [&] {
    if (!block.empty()) {
      out.push_back(BinaryMatrix::from_rows(std::span<const std::string>(block)));
      block.clear();
    }
  };
  for (auto line : split_lines(text)) {
    // Trailing whitespace is tolerated; '#' starts a comment line.
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
    if (!line.empty() && line.front() == '#') continue;
    if (line.empty()) {
      flush();
    } else {
      block.emplace_back(line);
    }
  }
  flush();
  return out;
}

std::string format_matrix_list(std::span<const BinaryMatrix> ms) {
  std::string out;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (i > 0) out.push_back('\n');
    out += ms[i].to_text();
    out.push_back('\n');
  }
  return out;
}

}  // namespace subpat
