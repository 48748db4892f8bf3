#pragma once

#include <optional>
#include <vector>

#include "subpat/classes.hpp"
#include "subpat/permutation.hpp"

namespace subpat {

/// Minimal permutations containing a quasi-permutation matrix m (k x l with
/// t ones): every one has size k + l - t. Sorted, without duplicates.
/// Throws std::invalid_argument when m is not a quasi-permutation matrix.
std::vector<Permutation> minimal_perms_containing(const BinaryMatrix& m);

struct PBasis {
  GroundSet ground = GroundSet::Permutations;
  MatrixSet members;
  /// Members are complete up to this rank; nullopt means complete outright.
  std::optional<int> complete_upto;
};

/// Minimal elements of the ground set outside c. Exact and complete for
/// permutations; up to rank rmax for the other ground sets.
PBasis p_basis(const ClassSpec& c, int rmax, int shards = 1);

/// x lies in the ground set, contains an excluded matrix, and every proper
/// ground-set submatrix of x avoids them all. Exhaustive.
bool is_p_basis_element(GroundSet g, std::span<const BinaryMatrix> excluded, const BinaryMatrix& x);

struct PlusMembership {
  bool member = false;
  /// False when non-membership only holds up to the search budget.
  bool exact = true;
  /// A class element containing the matrix.
  std::optional<BinaryMatrix> witness;
};

/// Whether m is a submatrix of some element of c. Exact for permutations;
/// for other ground sets class elements of rank <= budget are searched.
PlusMembership class_plus_membership(const ClassSpec& c, const BinaryMatrix& m, int budget);

int default_dmax(GroundSet g) noexcept;
int default_plus_budget(GroundSet g) noexcept;

struct CanonicalMBasis {
  GroundSet ground = GroundSet::Permutations;
  MatrixSet members;
  /// Matrices up to this rank were examined.
  int complete_upto = 0;
  /// False when some decision relied on a bounded search.
  bool exact = true;
};

CanonicalMBasis canonical_m_basis(const ClassSpec& c, int dmax, int budget);

struct MinimalMBasis {
  MatrixSet members;
  int verified_upto = 0;
};

/// Inclusion-minimal subsets B of the canonical m-basis with Av(B) = c at
/// every rank up to rmax.
std::vector<MinimalMBasis> minimal_m_bases(const ClassSpec& c, const CanonicalMBasis& canonical, int rmax);

struct PBasisMinimality {
  bool minimal = false;
  /// Dropping any member changes the class.
  bool no_member_redundant = false;
  /// Replacing any member by a proper submatrix changes the class.
  bool no_member_reducible = false;
  PBasis basis;
  int verified_upto = 0;
};

PBasisMinimality p_basis_is_minimal_m_basis(const ClassSpec& c, int rmax);

struct Separation {
  bool separated = false;
  /// Per canonical member: an element containing it and no other member.
  std::vector<std::optional<BinaryMatrix>> witnesses;
  bool exact = true;
};

Separation separating_witness_uniqueness(const ClassSpec& c, const CanonicalMBasis& canonical, int budget);

}  // namespace subpat
