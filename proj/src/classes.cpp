#include "subpat/classes.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <unordered_set>

#include "subpat/cache.hpp"
#include "subpat/containment.hpp"
#include "subpat/errors.hpp"
#include "subpat/shape.hpp"

namespace subpat {

MatrixSet::MatrixSet(std::vector<BinaryMatrix> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  antichain_ = is_antichain(members_);
}

bool MatrixSet::contains(const BinaryMatrix& m) const {
  return std::binary_search(members_.begin(), members_.end(), m);
}

ClassSpec::ClassSpec(GroundSet g, std::vector<BinaryMatrix> excl) : ground(g), excluded(std::move(excl)) {
  for (const auto& m : excluded) {
    if (g == GroundSet::Permutations && !is_quasi_permutation(m)) {
      warnings.push_back("excluded matrix is not a quasi-permutation matrix and restricts nothing:\n" + m.to_text());
    }
    if (g == GroundSet::QuasiPermutationMatrices && !is_quasi_permutation(m)) {
      warnings.push_back("excluded matrix never occurs in a quasi-permutation matrix:\n" + m.to_text());
    }
  }
}

std::string ClassSpec::serialize() const {
  std::string out = "ground ";
  out += to_string(ground);
  out += '\n';
  out += format_matrix_list(excluded.members());
  return out;
}

std::uint64_t spec_hash(const ClassSpec& c) { return fnv1a64(c.serialize()); }

std::string spec_hash_hex(const ClassSpec& c) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << spec_hash(c);
  return os.str();
}

std::optional<std::uint64_t> CountSequence::at(int rank) const {
  for (const auto& [r, n] : terms) {
    if (r == rank) return n;
  }
  return std::nullopt;
}

std::vector<std::uint64_t> CountSequence::counts() const {
  std::vector<std::uint64_t> out;
  for (const auto& t : terms) out.push_back(t.second);
  return out;
}

std::string CountSequence::to_csv() const {
  std::ostringstream os;
  os << "rank,count\n";
  for (const auto& [r, n] : terms) os << r << ',' << n << '\n';
  return os.str();
}

std::string CountSequence::to_bfile() const {
  std::ostringstream os;
  for (const auto& [r, n] : terms) os << r << ' ' << n << '\n';
  return os.str();
}

int default_budget(GroundSet g) noexcept {
  switch (g) {
    case GroundSet::Permutations: return 10;
    case GroundSet::Polyominoes: return 11;
    case GroundSet::BinaryMatrices: return 8;
    case GroundSet::QuasiPermutationMatrices: return 10;
  }
  return 8;
}

bool avoids_all(std::span<const BinaryMatrix> excluded, const BinaryMatrix& x) {
  for (const auto& m : excluded) {
    if (contains(x, m)) return false;
  }
  return true;
}

bool avoids(const ClassSpec& c, const BinaryMatrix& x) {
  if (!in_ground_set(c.ground, x)) {
    throw WrongGroundSet("matrix is not an element of the " + std::string(to_string(c.ground)) + " ground set");
  }
  return avoids_all(c.excluded.members(), x);
}

PrefixFilter avoidance_filter(std::span<const BinaryMatrix> excluded) {
  if (excluded.empty()) return {};
  std::vector<BinaryMatrix> ms(excluded.begin(), excluded.end());
  return [ms = std::move(ms)](std::span<const RowWord> top_rows, int cols) {
    for (const auto& m : ms) {
      if (static_cast<std::size_t>(m.rows()) > top_rows.size() || m.cols() > cols) continue;
      if (contains_rows(top_rows, cols, m.row_words(), m.cols())) return true;
    }
    return false;
  };
}

void for_each_member(const ClassSpec& c, int rank, const Visitor& visit, int shards) {
  GenerateOptions opts;
  opts.shards = shards;
  opts.prune = avoidance_filter(c.excluded.members());
  for_each_element(c.ground, rank, visit, opts);
}

std::vector<BinaryMatrix> members(const ClassSpec& c, int rank, int shards) {
  std::vector<BinaryMatrix> out;
  for_each_member(c, rank, [&](const BinaryMatrix& m) { out.push_back(m); }, shards);
  return out;
}

std::vector<BinaryMatrix> members_upto(const ClassSpec& c, int rmax, int shards) {
  std::vector<BinaryMatrix> out;
  for (int r = min_rank(c.ground); r <= rmax; ++r) {
    for_each_member(c, r, [&](const BinaryMatrix& m) { out.push_back(m); }, shards);
  }
  return out;
}

CountSequence count_sequence(const ClassSpec& c, int rmax, const CountOptions& opts) {
  const int budget = opts.budget > 0 ? opts.budget : default_budget(c.ground);
  if (rmax > budget) {
    throw BudgetExceeded("rank " + std::to_string(rmax) + " exceeds the budget of " + std::to_string(budget) +
                         " for " + std::string(to_string(c.ground)));
  }
  std::optional<CountCache> cache;
  if (opts.cache_dir) cache.emplace(*opts.cache_dir);
  const auto key = spec_hash(c);
  GenerateOptions gen;
  gen.shards = opts.shards;
  gen.prune = avoidance_filter(c.excluded.members());
  CountSequence seq;
  seq.ground = c.ground;
  for (int r = min_rank(c.ground); r <= rmax; ++r) {
    std::optional<std::uint64_t> n;
    if (cache) n = cache->get(key, r);
    if (!n) {
      n = count_elements(c.ground, r, {}, gen);
      if (cache) cache->put(key, r, *n);
    }
    seq.terms.emplace_back(r, *n);
  }
  return seq;
}

ClassComparison equal_classes(const ClassSpec& c1, const ClassSpec& c2, int rmax, int shards) {
  if (c1.ground != c2.ground) throw WrongGroundSet("classes over different ground sets cannot be compared");
  ClassComparison out;
  for (int r = min_rank(c1.ground); r <= rmax; ++r) {
    const auto a = members(c1, r, shards);
    const auto b = members(c2, r, shards);
    if (a != b) {
      std::vector<BinaryMatrix> diff;
      std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff));
      out.equal = false;
      out.witness = diff.front();
      return out;
    }
    out.verified_upto = r;
  }
  return out;
}

ClosureCheck is_downward_closed(std::span<const BinaryMatrix> s, GroundSet g) {
  ClosureCheck out;
  std::unordered_set<BinaryMatrix, BinaryMatrixHash> present(s.begin(), s.end());
  int top = 0;
  for (const auto& m : s) top = std::max(top, rank_of(g, m));
  std::vector<BinaryMatrix> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  for (const auto& m : sorted) {
    for (const auto& sub : proper_subelements(g, m)) {
      if (!present.count(sub)) {
        out.closed = false;
        out.member = m;
        out.missing = sub;
        return out;
      }
    }
  }
  out.verified_upto = top;
  return out;
}

}  // namespace subpat
