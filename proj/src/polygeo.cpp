#include "subpat/polygeo.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <vector>

#include "subpat/catalog.hpp"
#include "subpat/containment.hpp"
#include "subpat/errors.hpp"
#include "subpat/genum.hpp"
#include "subpat/shape.hpp"

namespace subpat {

namespace {

bool is_interval(RowWord w) noexcept {
  if (w == 0) return true;
  const RowWord shifted = w >> std::countr_zero(w);
  return (shifted & (shifted + 1)) == 0;
}

bool filled(const BinaryMatrix& p, int row, int col) noexcept {
  return row >= 1 && row <= p.rows() && col >= 1 && col <= p.cols() && p.at(row, col);
}

}  // namespace

bool is_h_convex(const BinaryMatrix& p) noexcept {
  for (auto w : p.row_words()) {
    if (!is_interval(w)) return false;
  }
  return true;
}

bool is_v_convex(const BinaryMatrix& p) noexcept { return is_h_convex(p.transposed()); }

bool is_convex(const BinaryMatrix& p) noexcept { return is_h_convex(p) && is_v_convex(p); }

bool is_directed(const BinaryMatrix& p) {
  const int R = p.rows();
  const int C = p.cols();
  const int total = p.ones();
  std::vector<char> seen(static_cast<std::size_t>(R * C));
  std::vector<std::pair<int, int>> stack;
  for (int sr = 1; sr <= R; ++sr) {
    for (int sc = 1; sc <= C; ++sc) {
      if (!p.at(sr, sc)) continue;
      std::fill(seen.begin(), seen.end(), 0);
      stack.assign(1, {sr, sc});
      seen[static_cast<std::size_t>((sr - 1) * C + sc - 1)] = 1;
      int reached = 1;
      while (!stack.empty()) {
        auto [r, c] = stack.back();
        stack.pop_back();
        const std::array<std::pair<int, int>, 2> next{{{r + 1, c}, {r, c + 1}}};
        for (auto [nr, nc] : next) {
          if (!filled(p, nr, nc)) continue;
          auto& s = seen[static_cast<std::size_t>((nr - 1) * C + nc - 1)];
          if (s) continue;
          s = 1;
          ++reached;
          stack.emplace_back(nr, nc);
        }
      }
      if (reached == total) return true;
    }
  }
  return false;
}

bool is_directed_convex(const BinaryMatrix& p) { return is_convex(p) && is_directed(p); }

bool is_parallelogram(const BinaryMatrix& p) {
  const int R = p.rows();
  const int C = p.cols();
  if (!filled(p, 1, 1) || !filled(p, R, C)) return false;
  // Headings: 0 east, 1 north, 2 west, 3 south. Lattice point (x, y) is the
  // corner shared by columns x, x+1 and rows y, y+1.
  auto boundary = [&](int x, int y, int d) {
    switch (d) {
      case 0: return filled(p, y + 1, x + 1) && !filled(p, y, x + 1);
      case 1: return filled(p, y + 1, x) && !filled(p, y + 1, x + 1);
      case 2: return filled(p, y, x) && !filled(p, y + 1, x);
      default: return filled(p, y, x + 1) && !filled(p, y, x);
    }
  };
  constexpr std::array<int, 4> dx{1, 0, -1, 0};
  constexpr std::array<int, 4> dy{0, 1, 0, -1};
  int x = 0;
  int y = 0;
  int d = 0;
  if (!boundary(0, 0, 0)) return false;
  std::vector<int> steps;
  long twice_area = 0;
  const int limit = 4 * (R + 1) * (C + 1);
  do {
    steps.push_back(d);
    twice_area += static_cast<long>(x) * (y + dy[static_cast<std::size_t>(d)]) -
                  static_cast<long>(x + dx[static_cast<std::size_t>(d)]) * y;
    x += dx[static_cast<std::size_t>(d)];
    y += dy[static_cast<std::size_t>(d)];
    if (static_cast<int>(steps.size()) > limit) return false;
    // Right turn first keeps the trace on the outermost boundary.
    int next = -1;
    for (int turn : {3, 0, 1, 2}) {
      const int cand = (d + turn) % 4;
      if (boundary(x, y, cand)) {
        next = cand;
        break;
      }
    }
    if (next < 0) return false;
    d = next;
  } while (x != 0 || y != 0);
  if (static_cast<int>(steps.size()) != 2 * (R + C)) return false;
  // East/north up to the top-right corner, then west/south home.
  std::size_t i = 0;
  int px = 0;
  int py = 0;
  while (i < steps.size() && (steps[i] == 0 || steps[i] == 1)) {
    px += dx[static_cast<std::size_t>(steps[i])];
    py += dy[static_cast<std::size_t>(steps[i])];
    ++i;
  }
  if (px != C || py != R) return false;
  for (; i < steps.size(); ++i) {
    if (steps[i] != 2 && steps[i] != 3) return false;
  }
  return twice_area == 2L * p.ones();
}

std::optional<int> convexity_degree(const BinaryMatrix& p) {
  if (!is_convex(p)) return std::nullopt;
  const int R = p.rows();
  const int C = p.cols();
  constexpr int kInf = std::numeric_limits<int>::max() / 4;
  const auto cells = static_cast<std::size_t>(R * C);
  // best[t] = fewest turns from the current source to t over the quadrants
  // containing t.
  std::vector<int> best(cells);
  std::vector<std::array<int, 2>> cost(cells);
  int degree = 0;
  for (int sr = 1; sr <= R; ++sr) {
    for (int sc = 1; sc <= C; ++sc) {
      if (!p.at(sr, sc)) continue;
      std::fill(best.begin(), best.end(), kInf);
      for (int vs : {1, -1}) {
        for (int hs : {1, -1}) {
          // Heading 0 vertical step (row += vs), heading 1 horizontal (col += hs).
          for (auto& c : cost) c = {kInf, kInf};
          auto at = [&](int r, int c) -> std::array<int, 2>& {
            return cost[static_cast<std::size_t>((r - 1) * C + c - 1)];
          };
          at(sr, sc) = {0, 0};
          for (int r = sr; r >= 1 && r <= R; r += vs) {
            for (int c = sc; c >= 1 && c <= C; c += hs) {
              if (!p.at(r, c) || (r == sr && c == sc)) continue;
              auto& here = at(r, c);
              if (r != sr && p.at(r - vs, c)) {
                const auto& from = at(r - vs, c);
                here[0] = std::min(here[0], std::min(from[0], from[1] + 1));
              }
              if (c != sc && p.at(r, c - hs)) {
                const auto& from = at(r, c - hs);
                here[1] = std::min(here[1], std::min(from[1], from[0] + 1));
              }
            }
          }
          for (int r = sr; r >= 1 && r <= R; r += vs) {
            for (int c = sc; c >= 1 && c <= C; c += hs) {
              if (!p.at(r, c)) continue;
              const auto& here = at(r, c);
              auto& b = best[static_cast<std::size_t>((r - 1) * C + c - 1)];
              b = std::min(b, std::min(here[0], here[1]));
            }
          }
        }
      }
      for (int r = 1; r <= R; ++r) {
        for (int c = 1; c <= C; ++c) {
          if (p.at(r, c)) degree = std::max(degree, best[static_cast<std::size_t>((r - 1) * C + c - 1)]);
        }
      }
    }
  }
  return degree;
}

Projections projections(const BinaryMatrix& m) { return {m.row_sums(), m.col_sums()}; }

bool is_unique_for_projections(const BinaryMatrix& m) {
  if (m.rows() > 5 || m.cols() > 5) throw BudgetExceeded("projection uniqueness is searched up to 5 x 5");
  const auto proj = projections(m);
  const int C = m.cols();
  std::vector<int> remaining = proj.col_sums;
  int solutions = 0;
  auto rec = [&](auto&& self, int row) -> void {
    if (solutions > 1) return;
    if (row > m.rows()) {
      if (std::all_of(remaining.begin(), remaining.end(), [](int v) { return v == 0; })) ++solutions;
      return;
    }
    const int rows_left = m.rows() - row + 1;
    for (RowWord w = 0; w < (RowWord{1} << C); ++w) {
      if (std::popcount(w) != proj.row_sums[static_cast<std::size_t>(row - 1)]) continue;
      bool ok = true;
      for (int j = 0; j < C; ++j) {
        const int v = remaining[static_cast<std::size_t>(j)] - static_cast<int>((w >> j) & 1U);
        if (v < 0 || v > rows_left - 1) ok = false;
      }
      if (!ok) continue;
      for (int j = 0; j < C; ++j) remaining[static_cast<std::size_t>(j)] -= static_cast<int>((w >> j) & 1U);
      self(self, row + 1);
      for (int j = 0; j < C; ++j) remaining[static_cast<std::size_t>(j)] += static_cast<int>((w >> j) & 1U);
    }
  };
  rec(rec, 1);
  return solutions == 1;
}

bool rows_columns_comparable(const BinaryMatrix& p) noexcept {
  auto nested = [](std::span<const RowWord> lines) {
    for (std::size_t i = 0; i < lines.size(); ++i) {
      for (std::size_t j = i + 1; j < lines.size(); ++j) {
        const RowWord a = lines[i];
        const RowWord b = lines[j];
        if ((a & b) != a && (a & b) != b) return false;
      }
    }
    return true;
  };
  const auto t = p.transposed();
  return nested(p.row_words()) && nested(t.row_words());
}

bool in_c_prime(const BinaryMatrix& p) {
  return !contains(p, catalog::isolated_in_column()) && !contains(p, catalog::isolated_in_row());
}

bool boundary_contact(const BinaryMatrix& p) noexcept {
  auto runs_touch = [](const BinaryMatrix& m) {
    const RowWord full = m.full_row_mask();
    const RowWord left = 1;
    const RowWord right = RowWord{1} << (m.cols() - 1);
    for (RowWord w : m.row_words()) {
      while (w != 0) {
        const RowWord low = w & (~w + 1);
        const RowWord run = (w ^ (w + low)) & w & full;
        if ((run & (left | right)) == 0) return false;
        w &= ~run;
      }
    }
    return true;
  };
  return runs_touch(p) && runs_touch(p.transposed());
}

BinaryMatrix embed_permutation_in_c_prime(const Permutation& p) {
  const int n = p.size();
  BinaryMatrix out(2 * n, 2 * n);
  for (int r = 1; r <= 2 * n; ++r) {
    for (int c = 1; c <= 2 * n; ++c) out.set(r, c, true);
  }
  for (int j = 1; j <= n; ++j) {
    const int i = p(j);
    out.set(2 * i - 1, 2 * j, false);
  }
  return out;
}

void for_each_convex_polyomino(int rank, const std::function<void(const BinaryMatrix&)>& visit) {
  for (int rows = 1; rows < rank; ++rows) {
    const int cols = rank - rows;
    if (cols > BinaryMatrix::kMaxCols) continue;
    std::vector<RowWord> words(static_cast<std::size_t>(rows));
    std::vector<RowWord> intervals;
    for (int a = 0; a < cols; ++a) {
      for (int b = a; b < cols; ++b) intervals.push_back(low_mask(b + 1) & ~low_mask(a));
    }
    // Rows from the top; a column that has been left may not be re-entered.
    auto rec = [&](auto&& self, int depth, RowWord prev, RowWord seen, RowWord closed) -> void {
      if (depth == rows) {
        if ((seen & 1U) && ((seen >> (cols - 1)) & 1U)) visit(BinaryMatrix(cols, words));
        return;
      }
      for (RowWord w : intervals) {
        if (w & closed) continue;
        if (depth > 0 && (w & prev) == 0) continue;
        words[static_cast<std::size_t>(rows - 1 - depth)] = w;
        self(self, depth + 1, w, seen | w, closed | (seen & ~w));
      }
    };
    rec(rec, 0, 0, 0, 0);
  }
}

std::optional<WitnessPair> find_directed_non_class_witness(int max_rank) {
  std::optional<WitnessPair> out;
  for (int r = min_rank(GroundSet::Polyominoes); r <= max_rank && !out; ++r) {
    for_each_element(GroundSet::Polyominoes, r, [&](const BinaryMatrix& x) {
      if (out || !is_directed(x)) return;
      for (const auto& sub : proper_subelements(GroundSet::Polyominoes, x)) {
        if (!is_directed(sub)) {
          out = WitnessPair{x, sub};
          return;
        }
      }
    });
  }
  return out;
}

std::optional<WitnessPair> find_two_convex_non_class_witness(int max_rank) {
  // Degree-3 convex polyominoes of the smallest rank at which they occur.
  std::vector<BinaryMatrix> degree_three;
  int r3 = 0;
  for (int r = 2; r <= max_rank && degree_three.empty(); ++r) {
    for_each_convex_polyomino(r, [&](const BinaryMatrix& x) {
      if (convexity_degree(x) == 3) degree_three.push_back(x);
    });
    r3 = r;
  }
  if (degree_three.empty()) return std::nullopt;
  std::optional<WitnessPair> out;
  for (int r = r3 + 1; r <= max_rank && !out; ++r) {
    for_each_convex_polyomino(r, [&](const BinaryMatrix& x) {
      if (out) return;
      const auto d = convexity_degree(x);
      if (!d || *d > 2) return;
      for (const auto& sub : degree_three) {
        if (contains(x, sub)) {
          out = WitnessPair{x, sub};
          return;
        }
      }
    });
  }
  return out;
}

std::optional<BinaryMatrix> find_convex_host(const BinaryMatrix& m, int max_rank) {
  std::optional<BinaryMatrix> out;
  for (int r = std::max(2, m.rank()); r <= max_rank && !out; ++r) {
    for_each_convex_polyomino(r, [&](const BinaryMatrix& x) {
      if (!out && contains(x, m)) out = x;
    });
  }
  return out;
}

}  // namespace subpat
