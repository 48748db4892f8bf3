#include "subpat/bases.hpp"

#include <algorithm>
#include <bit>
#include <memory>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "subpat/containment.hpp"
#include "subpat/errors.hpp"
#include "subpat/shape.hpp"

namespace subpat {

namespace {

std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = next; v <= n - (k - static_cast<int>(cur.size())) + 1; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

std::vector<int> complement(int n, const std::vector<int>& s) {
  std::vector<int> out;
  for (int v = 1; v <= n; ++v) {
    if (!std::binary_search(s.begin(), s.end(), v)) out.push_back(v);
  }
  return out;
}

// Universe the m-basis candidates are drawn from.
GroundSet matrix_universe(GroundSet g) {
  return (g == GroundSet::Permutations || g == GroundSet::QuasiPermutationMatrices)
             ? GroundSet::QuasiPermutationMatrices
             : GroundSet::BinaryMatrices;
}

std::vector<BinaryMatrix> single_deletions(const BinaryMatrix& m) {
  std::vector<BinaryMatrix> out;
  if (m.rows() > 1) {
    for (int i = 1; i <= m.rows(); ++i) out.push_back(m.without_row(i));
  }
  if (m.cols() > 1) {
    for (int j = 1; j <= m.cols(); ++j) out.push_back(m.without_col(j));
  }
  return out;
}

std::vector<BinaryMatrix> all_proper_submatrices(const BinaryMatrix& m) {
  std::set<BinaryMatrix> found;
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
      found.insert(m.submatrix(rows, cols));
    }
  }
  return {found.begin(), found.end()};
}

// First element of the ground set with rank in [lo, hi] accepted by `want`,
// skipping every element whose prefix `reject` refuses.
std::optional<BinaryMatrix> first_element(GroundSet g, int lo, int hi, const PrefixFilter& reject,
                                          const std::function<bool(const BinaryMatrix&)>& want) {
  std::optional<BinaryMatrix> hit;
  GenerateOptions opts;
  opts.prune = [&](std::span<const RowWord> rows, int cols) {
    if (hit) return true;
    return reject && reject(rows, cols);
  };
  for (int r = std::max(lo, min_rank(g)); r <= hi && !hit; ++r) {
    for_each_element(g, r, [&](const BinaryMatrix& x) {
      if (!hit && want(x)) hit = x;
    }, opts);
  }
  return hit;
}

// Class elements up to a rank, materialized once when there are few of them.
class MemberPool {
 public:
  MemberPool(const ClassSpec& c, int budget, std::size_t cap) {
    bool overflow = false;
    GenerateOptions opts;
    auto avoid = avoidance_filter(c.excluded.members());
    opts.prune = [&](std::span<const RowWord> rows, int cols) {
      if (overflow) return true;
      return avoid && avoid(rows, cols);
    };
    for (int r = min_rank(c.ground); r <= budget && !overflow; ++r) {
      for_each_element(c.ground, r, [&](const BinaryMatrix& x) {
        if (items_.size() >= cap) {
          overflow = true;
          return;
        }
        items_.push_back(x);
      }, opts);
    }
    usable_ = !overflow;
  }

  bool usable() const noexcept { return usable_; }

  std::optional<BinaryMatrix> find_host(const BinaryMatrix& m) const {
    for (const auto& x : items_) {
      if (x.rank() >= m.rank() && contains(x, m)) return x;
    }
    return std::nullopt;
  }

 private:
  std::vector<BinaryMatrix> items_;
  bool usable_ = false;
};

PlusMembership plus_membership_impl(const ClassSpec& c, const BinaryMatrix& m, int budget, const MemberPool* pool) {
  PlusMembership out;
  if (c.ground == GroundSet::Permutations) {
    if (!is_quasi_permutation(m)) return out;
    for (const auto& p : minimal_perms_containing(m)) {
      auto pm = permutation_to_matrix(p);
      if (avoids_all(c.excluded.members(), pm)) {
        out.member = true;
        out.witness = std::move(pm);
        return out;
      }
    }
    return out;
  }
  if (in_ground_set(c.ground, m) && avoids_all(c.excluded.members(), m)) {
    out.member = true;
    out.witness = m;
    return out;
  }
  std::optional<BinaryMatrix> hit;
  if (pool != nullptr && pool->usable()) {
    hit = pool->find_host(m);
  } else {
    hit = first_element(c.ground, m.rank(), budget, avoidance_filter(c.excluded.members()),
                        [&](const BinaryMatrix& x) { return contains(x, m); });
  }
  if (hit) {
    out.member = true;
    out.witness = std::move(hit);
  } else {
    out.exact = false;
  }
  return out;
}

// Av_g(b) and c agree at every rank up to rmax. Counts suffice once one
// class is known to include the other.
bool same_counts(GroundSet g, const std::vector<BinaryMatrix>& b, const std::vector<std::uint64_t>& reference,
                 int rmax) {
  GenerateOptions opts;
  opts.prune = avoidance_filter(b);
  for (int r = min_rank(g); r <= rmax; ++r) {
    if (count_elements(g, r, {}, opts) != reference[static_cast<std::size_t>(r - min_rank(g))]) return false;
  }
  return true;
}

// Av_g(b) equals c up to rmax, without assuming either inclusion.
bool same_members(GroundSet g, const std::vector<BinaryMatrix>& b, const ClassSpec& c, int rmax) {
  const ClassSpec other(g, b);
  return equal_classes(other, c, rmax).equal;
}

std::vector<std::uint64_t> class_counts(const ClassSpec& c, int rmax) {
  std::vector<std::uint64_t> out;
  GenerateOptions opts;
  opts.prune = avoidance_filter(c.excluded.members());
  for (int r = min_rank(c.ground); r <= rmax; ++r) out.push_back(count_elements(c.ground, r, {}, opts));
  return out;
}

}  // namespace

std::vector<Permutation> minimal_perms_containing(const BinaryMatrix& m) {
  if (!is_quasi_permutation(m)) throw std::invalid_argument("not a quasi-permutation matrix");
  const int k = m.rows();
  const int l = m.cols();
  const int t = m.ones();
  const int n = k + l - t;
  std::vector<int> zero_rows;
  std::vector<int> zero_cols;
  std::vector<std::pair<int, int>> ones;
  for (int i = 1; i <= k; ++i) {
    if (m.row_word(i) == 0) zero_rows.push_back(i);
  }
  const auto csum = m.col_sums();
  for (int j = 1; j <= l; ++j) {
    if (csum[static_cast<std::size_t>(j - 1)] == 0) zero_cols.push_back(j);
  }
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= l; ++j) {
      if (m.at(i, j)) ones.emplace_back(i, j);
    }
  }
  std::set<Permutation> found;
  std::vector<int> sigma(static_cast<std::size_t>(n));
  for (const auto& R : combinations(n, k)) {
    const auto new_rows = complement(n, R);
    for (const auto& C : combinations(n, l)) {
      auto new_cols = complement(n, C);
      auto rows_perm = new_rows;
      do {
        auto cols_perm = new_cols;
        do {
          for (auto [i, j] : ones) sigma[static_cast<std::size_t>(C[static_cast<std::size_t>(j - 1)] - 1)] = R[static_cast<std::size_t>(i - 1)];
          for (std::size_t z = 0; z < zero_cols.size(); ++z) {
            sigma[static_cast<std::size_t>(C[static_cast<std::size_t>(zero_cols[z] - 1)] - 1)] = rows_perm[z];
          }
          for (std::size_t z = 0; z < zero_rows.size(); ++z) {
            sigma[static_cast<std::size_t>(cols_perm[z] - 1)] = R[static_cast<std::size_t>(zero_rows[z] - 1)];
          }
          found.insert(Permutation(sigma));
        } while (std::next_permutation(cols_perm.begin(), cols_perm.end()));
      } while (std::next_permutation(rows_perm.begin(), rows_perm.end()));
    }
  }
  return {found.begin(), found.end()};
}

PBasis p_basis(const ClassSpec& c, int rmax, int shards) {
  PBasis out;
  out.ground = c.ground;
  if (c.ground == GroundSet::Permutations) {
    std::vector<BinaryMatrix> candidates;
    for (const auto& m : c.excluded) {
      if (!is_quasi_permutation(m)) continue;
      for (const auto& p : minimal_perms_containing(m)) candidates.push_back(permutation_to_matrix(p));
    }
    out.members = MatrixSet(minimal_elements(candidates));
    return out;
  }
  const auto& excl = c.excluded.members();
  std::vector<BinaryMatrix> found;
  GenerateOptions opts;
  opts.shards = shards;
  for (int r = min_rank(c.ground); r <= rmax; ++r) {
    for_each_element(c.ground, r, [&](const BinaryMatrix& x) {
      if (avoids_all(excl, x)) return;
      for (const auto& cover : lower_covers(c.ground, x)) {
        if (!avoids_all(excl, cover)) return;
      }
      for (const auto& sub : proper_subelements(c.ground, x)) {
        if (!avoids_all(excl, sub)) return;
      }
      found.push_back(x);
    }, opts);
  }
  out.members = MatrixSet(std::move(found));
  out.complete_upto = rmax;
  return out;
}

bool is_p_basis_element(GroundSet g, std::span<const BinaryMatrix> excluded, const BinaryMatrix& x) {
  if (!in_ground_set(g, x) || avoids_all(excluded, x)) return false;
  for (const auto& sub : proper_subelements(g, x)) {
    if (!avoids_all(excluded, sub)) return false;
  }
  return true;
}

int default_dmax(GroundSet g) noexcept { return g == GroundSet::Permutations ? 8 : 7; }

int default_plus_budget(GroundSet g) noexcept { return g == GroundSet::Permutations ? 16 : 12; }

PlusMembership class_plus_membership(const ClassSpec& c, const BinaryMatrix& m, int budget) {
  if (c.ground == GroundSet::Permutations && !is_quasi_permutation(m)) return {};
  return plus_membership_impl(c, m, budget, nullptr);
}

CanonicalMBasis canonical_m_basis(const ClassSpec& c, int dmax, int budget) {
  CanonicalMBasis out;
  out.ground = c.ground;
  std::unique_ptr<MemberPool> pool;
  if (c.ground != GroundSet::Permutations) pool = std::make_unique<MemberPool>(c, budget, 500000);
  const GroundSet universe = matrix_universe(c.ground);
  std::unordered_set<BinaryMatrix, BinaryMatrixHash> plus;
  std::vector<BinaryMatrix> basis;
  for (int d = 2; d <= dmax; ++d) {
    for (const auto& x : generate(universe, d)) {
      bool covers_in_plus = true;
      for (const auto& sub : single_deletions(x)) {
        if (!plus.count(sub)) {
          covers_in_plus = false;
          break;
        }
      }
      if (!covers_in_plus) continue;
      const auto r = plus_membership_impl(c, x, budget, pool.get());
      if (r.member) {
        plus.insert(x);
      } else {
        if (!r.exact) out.exact = false;
        basis.push_back(x);
      }
    }
    out.complete_upto = d;
  }
  out.members = MatrixSet(std::move(basis));
  return out;
}

std::vector<MinimalMBasis> minimal_m_bases(const ClassSpec& c, const CanonicalMBasis& canonical, int rmax) {
  const auto& all = canonical.members.members();
  const auto n = all.size();
  if (n > 20) throw BudgetExceeded("canonical m-basis too large for the subset search");
  const auto reference = class_counts(c, rmax);
  std::vector<std::uint64_t> masks;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) masks.push_back(s);
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) < std::popcount(b); });
  std::vector<std::uint64_t> successes;
  std::vector<MinimalMBasis> out;
  for (const auto s : masks) {
    const bool above_success =
        std::any_of(successes.begin(), successes.end(), [s](std::uint64_t w) { return (s & w) == w; });
    if (above_success) continue;
    std::vector<BinaryMatrix> b;
    for (std::size_t i = 0; i < n; ++i) {
      if ((s >> i) & 1U) b.push_back(all[i]);
    }
    if (!same_counts(c.ground, b, reference, rmax)) continue;
    successes.push_back(s);
    out.push_back({MatrixSet(std::move(b)), rmax});
  }
  std::sort(out.begin(), out.end(),
            [](const MinimalMBasis& a, const MinimalMBasis& b) { return a.members.members() < b.members.members(); });
  return out;
}

PBasisMinimality p_basis_is_minimal_m_basis(const ClassSpec& c, int rmax) {
  PBasisMinimality out;
  out.basis = p_basis(c, rmax);
  out.verified_upto = rmax;
  const auto& b = out.basis.members.members();
  out.no_member_redundant = true;
  for (std::size_t i = 0; i < b.size() && out.no_member_redundant; ++i) {
    std::vector<BinaryMatrix> rest;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (j != i) rest.push_back(b[j]);
    }
    if (same_members(c.ground, rest, c, rmax)) out.no_member_redundant = false;
  }
  out.no_member_reducible = true;
  for (std::size_t i = 0; i < b.size() && out.no_member_reducible; ++i) {
    for (const auto& sub : all_proper_submatrices(b[i])) {
      std::vector<BinaryMatrix> swapped;
      for (std::size_t j = 0; j < b.size(); ++j) swapped.push_back(j == i ? sub : b[j]);
      if (same_members(c.ground, swapped, c, rmax)) {
        out.no_member_reducible = false;
        break;
      }
    }
  }
  out.minimal = out.no_member_redundant && out.no_member_reducible;
  return out;
}

Separation separating_witness_uniqueness(const ClassSpec& c, const CanonicalMBasis& canonical, int budget) {
  Separation out;
  const auto& all = canonical.members.members();
  out.separated = true;
  for (std::size_t i = 0; i < all.size(); ++i) {
    std::vector<BinaryMatrix> others;
    for (std::size_t j = 0; j < all.size(); ++j) {
      if (j != i) others.push_back(all[j]);
    }
    std::optional<BinaryMatrix> hit;
    if (c.ground == GroundSet::Permutations) {
      // Any separating permutation contains a minimal one containing the member.
      if (is_quasi_permutation(all[i])) {
        for (const auto& p : minimal_perms_containing(all[i])) {
          auto pm = permutation_to_matrix(p);
          if (avoids_all(others, pm)) {
            hit = std::move(pm);
            break;
          }
        }
      }
    } else {
      hit = first_element(c.ground, min_rank(c.ground), budget, avoidance_filter(others),
                          [&](const BinaryMatrix& x) { return contains(x, all[i]); });
      if (!hit) out.exact = false;
    }
    if (!hit) out.separated = false;
    out.witnesses.push_back(std::move(hit));
  }
  return out;
}

}  // namespace subpat
