#include "subpat/wilfkit.hpp"

#include <algorithm>
#include <stdexcept>

namespace subpat {

std::string_view to_string(BorderSide s) noexcept {
  switch (s) {
    case BorderSide::Top: return "top";
    case BorderSide::Bottom: return "bottom";
    case BorderSide::Left: return "left";
    case BorderSide::Right: return "right";
  }
  return "?";
}

std::optional<BorderSide> parse_border_side(std::string_view text) noexcept {
  for (auto s : kAllSides) {
    if (to_string(s) == text) return s;
  }
  return std::nullopt;
}

BinaryMatrix border(const Permutation& tau, BorderSide side) {
  const auto m = permutation_to_matrix(tau);
  const int n = tau.size();
  std::vector<RowWord> rows(m.row_words().begin(), m.row_words().end());
  switch (side) {
    case BorderSide::Top:
      rows.push_back(0);
      return BinaryMatrix(n, rows);
    case BorderSide::Bottom:
      rows.insert(rows.begin(), RowWord{0});
      return BinaryMatrix(n, rows);
    case BorderSide::Left:
      for (auto& w : rows) w <<= 1;
      return BinaryMatrix(n + 1, rows);
    case BorderSide::Right:
      return BinaryMatrix(n + 1, rows);
  }
  return m;
}

namespace {

Permutation standardize(const std::vector<int>& v) {
  std::vector<int> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> out;
  for (int x : v) out.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin()) + 1);
  return Permutation(out);
}

}  // namespace

Permutation decompose_extreme(const Permutation& sigma, BorderSide side) {
  if (sigma.size() < 2) throw std::invalid_argument("nothing left after removing the extreme entry");
  auto v = sigma.values();
  switch (side) {
    case BorderSide::Top: v.erase(std::max_element(v.begin(), v.end())); break;
    case BorderSide::Bottom: v.erase(std::min_element(v.begin(), v.end())); break;
    case BorderSide::Left: v.erase(v.begin()); break;
    case BorderSide::Right: v.pop_back(); break;
  }
  return standardize(v);
}

std::vector<Permutation> insert_extreme(const Permutation& sigma, BorderSide side) {
  const int n = sigma.size();
  std::vector<Permutation> out;
  const auto& v = sigma.values();
  for (int k = 0; k <= n; ++k) {
    std::vector<int> w;
    switch (side) {
      case BorderSide::Top:
        w = v;
        w.insert(w.begin() + k, n + 1);
        break;
      case BorderSide::Bottom:
        for (int x : v) w.push_back(x + 1);
        w.insert(w.begin() + k, 1);
        break;
      case BorderSide::Left:
        // New first entry takes value k + 1.
        w.push_back(k + 1);
        for (int x : v) w.push_back(x > k ? x + 1 : x);
        break;
      case BorderSide::Right:
        for (int x : v) w.push_back(x > k ? x + 1 : x);
        w.push_back(k + 1);
        break;
    }
    out.emplace_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<BinaryMatrix> matrices_of(const std::vector<Permutation>& ps) {
  std::vector<BinaryMatrix> out;
  for (const auto& p : ps) out.push_back(permutation_to_matrix(p));
  return out;
}

}  // namespace

BorderedCount check_bordered_count(const std::vector<Permutation>& tau_set, BorderSide side, int nmax,
                                   const CountOptions& opts) {
  std::vector<BinaryMatrix> bordered;
  for (const auto& t : tau_set) bordered.push_back(border(t, side));
  BorderedCount out;
  out.bordered = count_sequence(ClassSpec(GroundSet::Permutations, bordered), nmax, opts);
  out.base = count_sequence(ClassSpec(GroundSet::Permutations, matrices_of(tau_set)), nmax, opts);
  for (int n = 2; n <= nmax; ++n) {
    const auto lhs = *out.bordered.at(n);
    const auto rhs = static_cast<std::uint64_t>(n) * *out.base.at(n - 1);
    if (lhs != rhs) {
      out.holds = false;
      out.first_failure = n;
      break;
    }
  }
  return out;
}

WilfReport check_wilf_equivalence(const std::vector<Permutation>& b1, const std::vector<Permutation>& b2, int nmax,
                                  const CountOptions& opts) {
  WilfReport out;
  out.nmax = nmax;
  int which = 0;
  for (const auto* b : {&b1, &b2}) {
    ++which;
    for (auto side : kAllSides) {
      std::vector<BinaryMatrix> ms;
      for (const auto& t : *b) ms.push_back(border(t, side));
      out.labels.push_back("b" + std::to_string(which) + "-" + std::string(to_string(side)));
      out.sequences.push_back(count_sequence(ClassSpec(GroundSet::Permutations, ms), nmax, opts));
    }
  }
  for (const auto& s : out.sequences) {
    for (std::size_t i = 0; i < s.terms.size(); ++i) {
      if (s.terms[i].second != out.sequences.front().terms[i].second) {
        out.all_equal = false;
        const int r = s.terms[i].first;
        if (!out.first_difference || r < *out.first_difference) out.first_difference = r;
      }
    }
  }
  return out;
}

}  // namespace subpat
