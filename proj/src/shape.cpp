#include "subpat/shape.hpp"

#include <algorithm>
#include <bit>
#include <vector>

namespace subpat {

namespace {

// Grows `reach` to the full component(s) of `rows` it touches.
void flood(std::span<const RowWord> rows, std::span<RowWord> reach) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      RowWord r = reach[i];
      if (i > 0) r |= reach[i - 1] & rows[i];
      if (i + 1 < rows.size()) r |= reach[i + 1] & rows[i];
      // Spread along the row until the run is exhausted.
      while (true) {
        const RowWord grown = (r | (r << 1) | (r >> 1)) & rows[i];
        if (grown == r) break;
        r = grown;
      }
      if (r != reach[i]) {
        reach[i] = r;
        changed = true;
      }
    }
  }
}

}  // namespace

int count_components(std::span<const RowWord> rows) noexcept {
  std::vector<RowWord> left(rows.begin(), rows.end());
  std::vector<RowWord> reach(rows.size());
  int n = 0;
  for (std::size_t i = 0; i < left.size(); ++i) {
    while (left[i] != 0) {
      std::fill(reach.begin(), reach.end(), RowWord{0});
      reach[i] = left[i] & (~left[i] + 1);
      flood(left, reach);
      for (std::size_t k = 0; k < left.size(); ++k) left[k] &= ~reach[k];
      ++n;
    }
  }
  return n;
}

bool is_polyomino(const BinaryMatrix& m) noexcept {
  const auto rows = m.row_words();
  if (rows.front() == 0 || rows.back() == 0) return false;
  RowWord any = 0;
  for (auto w : rows) any |= w;
  if ((any & 1U) == 0 || ((any >> (m.cols() - 1)) & 1U) == 0) return false;
  std::vector<RowWord> reach(rows.size(), 0);
  reach[0] = rows[0] & (~rows[0] + 1);
  flood(rows, reach);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (reach[i] != rows[i]) return false;
  }
  return true;
}

bool is_quasi_permutation(const BinaryMatrix& m) noexcept {
  RowWord used = 0;
  for (auto w : m.row_words()) {
    if (std::popcount(w) > 1 || (used & w)) return false;
    used |= w;
  }
  return true;
}

}  // namespace subpat
