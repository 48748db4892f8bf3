#include "subpat/containment.hpp"

#include <algorithm>
#include <array>

namespace subpat {

namespace {

// Backtracking over increasing column tuples. After fixing the first t
// pattern columns, every host row is projected onto the chosen columns and
// the pattern rows (restricted to their first t columns) must appear as a
// subsequence of the projected host rows. Greedy leftmost matching decides
// the subsequence question exactly, so the check doubles as pruning at
// every depth and as the final test at full depth.
class ColumnSearch {
 public:
  ColumnSearch(std::span<const RowWord> host, int host_cols, std::span<const RowWord> pattern,
               int pattern_cols)
      : host_(host), host_cols_(host_cols), pattern_(pattern), pattern_cols_(pattern_cols) {
    // Scratch space is reused across calls; the search is not reentrant.
    thread_local std::vector<RowWord> proj_buffer;
    thread_local std::vector<int> chosen_buffer;
    const auto need = (static_cast<std::size_t>(pattern_cols) + 1) * host.size();
    if (proj_buffer.size() < need) proj_buffer.resize(need);
    std::fill_n(proj_buffer.begin(), host.size(), RowWord{0});
    chosen_buffer.assign(static_cast<std::size_t>(pattern_cols), 0);
    proj_ = proj_buffer.data();
    chosen_ = &chosen_buffer;
  }

  bool run(Embedding* witness) {
    if (!descend(0, 0)) return false;
    if (witness != nullptr) {
      witness->cols.clear();
      for (int c : *chosen_) witness->cols.push_back(c + 1);
      witness->rows = matched_rows();
    }
    return true;
  }

 private:
  std::span<RowWord> level(int depth) {
    return {proj_ + static_cast<std::size_t>(depth) * host_.size(), host_.size()};
  }

  bool rows_match(std::span<const RowWord> proj, RowWord mask) const {
    std::size_t j = 0;
    const std::size_t k = pattern_.size();
    for (std::size_t h = 0; h < proj.size() && j < k; ++h) {
      if (proj[h] == (pattern_[j] & mask)) ++j;
      // Not enough host rows left to place the remaining pattern rows.
      else if (proj.size() - h - 1 < k - j) return false;
    }
    return j == k;
  }

  std::vector<int> matched_rows() {
    const auto proj = level(pattern_cols_);
    std::vector<int> rows;
    std::size_t j = 0;
    for (std::size_t h = 0; h < proj.size() && j < pattern_.size(); ++h) {
      if (proj[h] == pattern_[j]) {
        rows.push_back(static_cast<int>(h) + 1);
        ++j;
      }
    }
    return rows;
  }

  bool descend(int depth, int first_col) {
    const auto prev = level(depth);
    const auto next = level(depth + 1);
    const RowWord mask = low_mask(depth + 1);
    const int last_col = host_cols_ - (pattern_cols_ - depth);
    for (int c = first_col; c <= last_col; ++c) {
      for (std::size_t h = 0; h < host_.size(); ++h) {
        next[h] = prev[h] | (((host_[h] >> c) & 1U) << depth);
      }
      if (!rows_match(next, mask)) continue;
      (*chosen_)[static_cast<std::size_t>(depth)] = c;
      if (depth + 1 == pattern_cols_) return true;
      if (descend(depth + 1, c + 1)) return true;
    }
    return false;
  }

  std::span<const RowWord> host_;
  int host_cols_;
  std::span<const RowWord> pattern_;
  int pattern_cols_;
  RowWord* proj_ = nullptr;
  std::vector<int>* chosen_ = nullptr;
};

}  // namespace

bool contains_rows(std::span<const RowWord> host, int host_cols, std::span<const RowWord> pattern,
                   int pattern_cols, Embedding* witness) {
  if (pattern.size() > host.size() || pattern_cols > host_cols) return false;
  if (pattern.empty() || pattern_cols == 0) return true;
  ColumnSearch search(host, host_cols, pattern, pattern_cols);
  return search.run(witness);
}

bool contains(const BinaryMatrix& host, const BinaryMatrix& pattern) {
  return contains_rows(host.row_words(), host.cols(), pattern.row_words(), pattern.cols());
}

std::optional<Embedding> find_embedding(const BinaryMatrix& host, const BinaryMatrix& pattern) {
  Embedding e;
  if (!contains_rows(host.row_words(), host.cols(), pattern.row_words(), pattern.cols(), &e)) {
    return std::nullopt;
  }
  return e;
}

bool is_valid_embedding(const BinaryMatrix& host, const BinaryMatrix& pattern, const Embedding& e) {
  if (static_cast<int>(e.rows.size()) != pattern.rows() || static_cast<int>(e.cols.size()) != pattern.cols()) {
    return false;
  }
  auto increasing_within = [](const std::vector<int>& v, int limit) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] < 1 || v[i] > limit) return false;
      if (i > 0 && v[i] <= v[i - 1]) return false;
    }
    return true;
  };
  if (!increasing_within(e.rows, host.rows()) || !increasing_within(e.cols, host.cols())) return false;
  for (int i = 1; i <= pattern.rows(); ++i) {
    for (int j = 1; j <= pattern.cols(); ++j) {
      if (host.at(e.rows[static_cast<std::size_t>(i - 1)], e.cols[static_cast<std::size_t>(j - 1)]) !=
          pattern.at(i, j)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace subpat
