#include "subpat/genum.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <set>
#include <thread>

#include "subpat/containment.hpp"
#include "subpat/permutation.hpp"
#include "subpat/shape.hpp"

namespace subpat {

std::string_view to_string(GroundSet g) noexcept {
  switch (g) {
    case GroundSet::Permutations: return "permutations";
    case GroundSet::Polyominoes: return "polyominoes";
    case GroundSet::BinaryMatrices: return "binary-matrices";
    case GroundSet::QuasiPermutationMatrices: return "quasi-permutation-matrices";
  }
  return "unknown";
}

std::optional<GroundSet> parse_ground_set(std::string_view text) noexcept {
  if (text == "perm" || text == "perms" || text == "permutations") return GroundSet::Permutations;
  if (text == "poly" || text == "polyominoes") return GroundSet::Polyominoes;
  if (text == "matrix" || text == "matrices" || text == "binary-matrices") return GroundSet::BinaryMatrices;
  if (text == "quasi" || text == "quasi-permutation-matrices") return GroundSet::QuasiPermutationMatrices;
  return std::nullopt;
}

int min_rank(GroundSet g) noexcept { return g == GroundSet::Permutations ? 1 : 2; }

int rank_of(GroundSet g, const BinaryMatrix& m) noexcept {
  return g == GroundSet::Permutations ? m.rows() : m.rank();
}

bool in_ground_set(GroundSet g, const BinaryMatrix& m) noexcept {
  switch (g) {
    case GroundSet::Permutations: return is_permutation_matrix(m);
    case GroundSet::Polyominoes: return is_polyomino(m);
    case GroundSet::BinaryMatrices: return true;
    case GroundSet::QuasiPermutationMatrices: return is_quasi_permutation(m);
  }
  return false;
}

namespace {

// Connectivity of the 1-cells above and including the most recent row,
// described on the runs of that row. Components that no longer reach the
// most recent row can never be joined again, so a transition that strands
// one is rejected on the spot.
struct Frontier {
  int runs = 0;
  std::array<RowWord, 32> run_mask{};
  std::array<std::uint8_t, 32> label{};
  int labels = 0;
};

int split_runs(RowWord w, std::array<RowWord, 32>& out) {
  int n = 0;
  while (w != 0) {
    const RowWord low = w & (~w + 1);
    const RowWord run = (w ^ (w + low)) & w;
    out[static_cast<std::size_t>(n++)] = run;
    w &= ~run;
  }
  return n;
}

bool advance_frontier(const Frontier* prev, RowWord row, Frontier& next) {
  next.runs = split_runs(row, next.run_mask);
  if (prev == nullptr) {
    for (int i = 0; i < next.runs; ++i) next.label[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
    next.labels = next.runs;
    return true;
  }
  // Union-find over previous labels [0, L) and new runs [L, L + runs).
  std::array<std::uint8_t, 64> parent{};
  const int total = prev->labels + next.runs;
  for (int i = 0; i < total; ++i) parent[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[parent[static_cast<std::size_t>(x)]];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  std::uint64_t touched = 0;
  for (int p = 0; p < prev->runs; ++p) {
    const RowWord pm = prev->run_mask[static_cast<std::size_t>(p)];
    if ((pm & row) == 0) continue;
    const int pl = prev->label[static_cast<std::size_t>(p)];
    touched |= std::uint64_t{1} << pl;
    for (int i = 0; i < next.runs; ++i) {
      if (pm & next.run_mask[static_cast<std::size_t>(i)]) {
        const int a = find(pl);
        const int b = find(prev->labels + i);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = static_cast<std::uint8_t>(std::min(a, b));
      }
    }
  }
  if (std::popcount(touched) != prev->labels) return false;
  std::array<int, 64> relabel;
  relabel.fill(-1);
  int labels = 0;
  for (int i = 0; i < next.runs; ++i) {
    const int root = find(prev->labels + i);
    if (relabel[static_cast<std::size_t>(root)] < 0) relabel[static_cast<std::size_t>(root)] = labels++;
    next.label[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(relabel[static_cast<std::size_t>(root)]);
  }
  next.labels = labels;
  return true;
}

// Row choices in increasing order of their '0'/'1' string (column 1 first).
std::vector<RowWord> row_choices(GroundSet g, int cols) {
  std::vector<RowWord> out;
  switch (g) {
    case GroundSet::BinaryMatrices:
    case GroundSet::Polyominoes: {
      const RowWord n = RowWord{1} << cols;
      for (RowWord v = (g == GroundSet::Polyominoes ? 1 : 0); v < n; ++v) out.push_back(reverse_bits(v, cols));
      break;
    }
    case GroundSet::QuasiPermutationMatrices:
      out.push_back(0);
      [[fallthrough]];
    case GroundSet::Permutations:
      for (int c = cols - 1; c >= 0; --c) out.push_back(RowWord{1} << c);
      break;
  }
  return out;
}

struct Box {
  int rows;
  int cols;
};

std::vector<Box> boxes_of_rank(GroundSet g, int rank) {
  std::vector<Box> out;
  if (g == GroundSet::Permutations) {
    if (rank >= 1) out.push_back({rank, rank});
    return out;
  }
  for (int r = 1; r <= rank - 1; ++r) {
    const int c = rank - r;
    if (c <= BinaryMatrix::kMaxCols) out.push_back({r, c});
  }
  return out;
}

class BoxWalker {
 public:
  BoxWalker(GroundSet g, Box box, const PrefixFilter& prune)
      : g_(g), box_(box), prune_(prune), choices_(row_choices(g, box.cols)),
        words_(static_cast<std::size_t>(box.rows), 0), frontiers_(static_cast<std::size_t>(box.rows)) {}

  std::size_t first_row_choices() const { return choices_.size(); }

  template <class Emit>
  void run(std::size_t first, std::size_t last, Emit&& emit) {
    for (std::size_t k = first; k < last; ++k) {
      place(0, choices_[k], 0, 0, emit);
    }
  }

 private:
  template <class Emit>
  void place(int depth, RowWord row, RowWord used, RowWord seen, Emit& emit) {
    const bool exclusive = g_ == GroundSet::Permutations || g_ == GroundSet::QuasiPermutationMatrices;
    if (exclusive && (used & row)) return;
    const auto idx = static_cast<std::size_t>(box_.rows - 1 - depth);
    if (g_ == GroundSet::Polyominoes) {
      const Frontier* prev = depth == 0 ? nullptr : &frontiers_[static_cast<std::size_t>(depth - 1)];
      if (!advance_frontier(prev, row, frontiers_[static_cast<std::size_t>(depth)])) return;
    }
    words_[idx] = row;
    if (prune_ && prune_(std::span<const RowWord>(words_.data() + idx, static_cast<std::size_t>(depth + 1)), box_.cols)) {
      return;
    }
    used |= row;
    seen |= row;
    if (depth + 1 == box_.rows) {
      if (g_ == GroundSet::Polyominoes) {
        const auto& f = frontiers_[static_cast<std::size_t>(depth)];
        if (f.labels != 1 || (seen & 1U) == 0 || ((seen >> (box_.cols - 1)) & 1U) == 0) return;
      }
      emit(words_);
      return;
    }
    for (RowWord next : choices_) place(depth + 1, next, used, seen, emit);
  }

  GroundSet g_;
  Box box_;
  const PrefixFilter& prune_;
  std::vector<RowWord> choices_;
  std::vector<RowWord> words_;
  std::vector<Frontier> frontiers_;
};

template <class Block>
void run_blocks(std::size_t choices, int shards, Block&& block) {
  const auto n = static_cast<std::size_t>(std::max(1, shards));
  if (n == 1 || choices < 2) {
    block(0, 0, choices);
    return;
  }
  const std::size_t parts = std::min(n, choices);
  std::vector<std::thread> workers;
  workers.reserve(parts);
  for (std::size_t s = 0; s < parts; ++s) {
    const std::size_t lo = choices * s / parts;
    const std::size_t hi = choices * (s + 1) / parts;
    workers.emplace_back([&block, s, lo, hi] { block(s, lo, hi); });
  }
  for (auto& w : workers) w.join();
}

}  // namespace

namespace {

void visit_box(GroundSet g, Box box, const Visitor& visit, const GenerateOptions& opts) {
  BoxWalker probe(g, box, opts.prune);
  const auto choices = probe.first_row_choices();
  if (opts.shards <= 1) {
    probe.run(0, choices, [&](const std::vector<RowWord>& words) { visit(BinaryMatrix(box.cols, words)); });
    return;
  }
  const auto parts = std::min<std::size_t>(static_cast<std::size_t>(opts.shards), choices);
  std::vector<std::vector<BinaryMatrix>> out(std::max<std::size_t>(parts, 1));
  run_blocks(choices, opts.shards, [&](std::size_t s, std::size_t lo, std::size_t hi) {
    BoxWalker walker(g, box, opts.prune);
    walker.run(lo, hi, [&](const std::vector<RowWord>& words) { out[s].emplace_back(box.cols, words); });
  });
  for (const auto& part : out) {
    for (const auto& m : part) visit(m);
  }
}

}  // namespace

void for_each_in_box(GroundSet g, int rows, int cols, const Visitor& visit, const GenerateOptions& opts) {
  if (rows < 1 || cols < 1 || cols > BinaryMatrix::kMaxCols) return;
  if (g == GroundSet::Permutations && rows != cols) return;
  visit_box(g, {rows, cols}, visit, opts);
}

void for_each_element(GroundSet g, int rank, const Visitor& visit, const GenerateOptions& opts) {
  for (const Box box : boxes_of_rank(g, rank)) visit_box(g, box, visit, opts);
}

std::vector<BinaryMatrix> generate(GroundSet g, int rank, const GenerateOptions& opts) {
  std::vector<BinaryMatrix> out;
  for_each_element(g, rank, [&](const BinaryMatrix& m) { out.push_back(m); }, opts);
  return out;
}

std::vector<BinaryMatrix> generate_upto(GroundSet g, int rmax, const GenerateOptions& opts) {
  std::vector<BinaryMatrix> out;
  for (int r = min_rank(g); r <= rmax; ++r) {
    for_each_element(g, r, [&](const BinaryMatrix& m) { out.push_back(m); }, opts);
  }
  return out;
}

std::uint64_t count_elements(GroundSet g, int rank, const std::function<bool(const BinaryMatrix&)>& accept,
                             const GenerateOptions& opts) {
  std::uint64_t total = 0;
  for (const Box box : boxes_of_rank(g, rank)) {
    BoxWalker probe(g, box, opts.prune);
    const auto choices = probe.first_row_choices();
    const auto parts = std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(std::max(1, opts.shards)), choices));
    std::vector<std::uint64_t> counts(parts, 0);
    run_blocks(choices, opts.shards, [&](std::size_t s, std::size_t lo, std::size_t hi) {
      BoxWalker walker(g, box, opts.prune);
      walker.run(lo, hi, [&](const std::vector<RowWord>& words) {
        if (!accept || accept(BinaryMatrix(box.cols, words))) ++counts[s];
      });
    });
    total = std::accumulate(counts.begin(), counts.end(), total);
  }
  return total;
}

std::vector<BinaryMatrix> minimal_elements(std::span<const BinaryMatrix> s) {
  std::vector<BinaryMatrix> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<BinaryMatrix> out;
  for (const auto& x : sorted) {
    bool minimal = true;
    // Anything x strictly contains sorts before it: smaller rank.
    for (const auto& y : sorted) {
      if (y.rank() >= x.rank()) break;
      if (contains(x, y)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(x);
  }
  return out;
}

bool is_antichain(std::span<const BinaryMatrix> s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (i == j) continue;
      if (s[i] == s[j] || contains(s[i], s[j])) return false;
    }
  }
  return true;
}

std::vector<BinaryMatrix> lower_covers(GroundSet g, const BinaryMatrix& m) {
  std::vector<BinaryMatrix> out;
  if (g == GroundSet::Permutations) {
    if (!is_permutation_matrix(m) || m.rows() == 1) return out;
    for (int i = 1; i <= m.rows(); ++i) {
      const int col = std::countr_zero(m.row_word(i)) + 1;
      out.push_back(m.without_row(i).without_col(col));
    }
  } else {
    if (m.rows() > 1) {
      for (int i = 1; i <= m.rows(); ++i) {
        auto c = m.without_row(i);
        if (in_ground_set(g, c)) out.push_back(std::move(c));
      }
    }
    if (m.cols() > 1) {
      for (int j = 1; j <= m.cols(); ++j) {
        auto c = m.without_col(j);
        if (in_ground_set(g, c)) out.push_back(std::move(c));
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<BinaryMatrix> proper_subelements(GroundSet g, const BinaryMatrix& m) {
  std::set<BinaryMatrix> found;
  if (g == GroundSet::Permutations) {
    if (!is_permutation_matrix(m)) return {};
    const auto p = matrix_to_permutation(m);
    const int n = p.size();
    std::vector<int> rows;
    std::vector<int> cols;
    for (std::uint64_t s = 1; s + 1 < (std::uint64_t{1} << n); ++s) {
      rows.clear();
      cols.clear();
      for (int j = 0; j < n; ++j) {
        if ((s >> j) & 1U) cols.push_back(j + 1);
      }
      for (int c : cols) rows.push_back(p(c));
      std::sort(rows.begin(), rows.end());
      found.insert(m.submatrix(rows, cols));
    }
    return {found.begin(), found.end()};
  }
  const int R = m.rows();
  const int C = m.cols();
  std::vector<int> rows;
  std::vector<int> cols;
  for (std::uint64_t rs = 1; rs < (std::uint64_t{1} << R); ++rs) {
    rows.clear();
    for (int i = 0; i < R; ++i) {
      if ((rs >> i) & 1U) rows.push_back(i + 1);
    }
    for (std::uint64_t cs = 1; cs < (std::uint64_t{1} << C); ++cs) {
      if (std::popcount(rs) == R && std::popcount(cs) == C) continue;
      cols.clear();
      for (int j = 0; j < C; ++j) {
        if ((cs >> j) & 1U) cols.push_back(j + 1);
      }
      auto sub = m.submatrix(rows, cols);
      if (in_ground_set(g, sub)) found.insert(std::move(sub));
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace subpat
