#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "subpat/genum.hpp"
#include "subpat/matrix.hpp"

namespace subpat {

/// Finite set of matrices, kept sorted in canonical order without duplicates.
class MatrixSet {
 public:
  MatrixSet() = default;
  explicit MatrixSet(std::vector<BinaryMatrix> members);

  const std::vector<BinaryMatrix>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(const BinaryMatrix& m) const;
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  bool antichain_verified() const noexcept { return antichain_; }

  bool operator==(const MatrixSet& other) const { return members_ == other.members_; }

 private:
  std::vector<BinaryMatrix> members_;
  bool antichain_ = false;
};

/// Av_g(excluded).
struct ClassSpec {
  GroundSet ground = GroundSet::Permutations;
  MatrixSet excluded;
  /// Excluded matrices that can never occur in the ground set.
  std::vector<std::string> warnings;

  ClassSpec() = default;
  ClassSpec(GroundSet g, std::vector<BinaryMatrix> excluded);

  /// Stable text form: ground set name, then the excluded matrices.
  std::string serialize() const;
};

/// FNV-1a 64 of serialize().
std::uint64_t spec_hash(const ClassSpec& c);
std::string spec_hash_hex(const ClassSpec& c);

struct CountSequence {
  GroundSet ground = GroundSet::Permutations;
  std::vector<std::pair<int, std::uint64_t>> terms;

  std::optional<std::uint64_t> at(int rank) const;
  std::vector<std::uint64_t> counts() const;
  std::string to_csv() const;
  std::string to_bfile() const;
};

/// Largest rank counted or enumerated without an explicit override.
int default_budget(GroundSet g) noexcept;

/// Throws WrongGroundSet if `x` is not in c.ground.
bool avoids(const ClassSpec& c, const BinaryMatrix& x);
/// No ground-set check.
bool avoids_all(std::span<const BinaryMatrix> excluded, const BinaryMatrix& x);

/// Prefix filter discarding partial matrices that already contain an excluded matrix.
PrefixFilter avoidance_filter(std::span<const BinaryMatrix> excluded);

void for_each_member(const ClassSpec& c, int rank, const Visitor& visit, int shards = 1);
std::vector<BinaryMatrix> members(const ClassSpec& c, int rank, int shards = 1);
std::vector<BinaryMatrix> members_upto(const ClassSpec& c, int rmax, int shards = 1);

struct CountOptions {
  int shards = 1;
  /// Overrides default_budget when positive.
  int budget = 0;
  /// Per-rank counts are read from and written to this directory when set.
  std::optional<std::filesystem::path> cache_dir;
};

/// Counts at ranks min_rank..rmax. Throws BudgetExceeded above the budget.
CountSequence count_sequence(const ClassSpec& c, int rmax, const CountOptions& opts = {});

/// Bounded comparison: member sets agree at every rank up to verified_upto.
struct ClassComparison {
  bool equal = true;
  int verified_upto = 0;
  /// First element found in exactly one of the two classes.
  std::optional<BinaryMatrix> witness;
};
ClassComparison equal_classes(const ClassSpec& c1, const ClassSpec& c2, int rmax, int shards = 1);

struct ClosureCheck {
  bool closed = true;
  int verified_upto = 0;
  std::optional<BinaryMatrix> member;
  std::optional<BinaryMatrix> missing;
};
/// `s` must hold every element it is meant to hold up to its largest rank.
ClosureCheck is_downward_closed(std::span<const BinaryMatrix> s, GroundSet g);

}  // namespace subpat
