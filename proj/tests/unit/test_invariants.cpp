#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "subpat/catalog.hpp"
#include "subpat/classes.hpp"
#include "subpat/containment.hpp"
#include "subpat/shape.hpp"
#include "subpat/wilfkit.hpp"

using namespace subpat;
namespace cat = subpat::catalog;

TEST_CASE("submatrix order is a partial order on small matrices") {
  std::vector<BinaryMatrix> all;
  for (int r = 1; r <= 3; ++r)
    for (int c = 1; c <= 3; ++c)
      if (r * c <= 6)
        for (auto& m : oracle::all_matrices(r, c)) all.push_back(m);
  for (const auto& a : all) CHECK(contains(a, a));
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int t = 0; t < 20000; ++t) {
    const auto& a = all[pick(rng)];
    const auto& b = all[pick(rng)];
    const auto& c = all[pick(rng)];
    if (contains(a, b) && contains(b, a)) CHECK(a == b);
    if (contains(a, b) && contains(b, c)) CHECK(contains(a, c));
    if (b.rows() > a.rows() || b.cols() > a.cols()) CHECK(!contains(a, b));
  }
}

TEST_CASE("permutation round trip up to size 7") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& p : all_permutations(n)) CHECK(matrix_to_permutation(permutation_to_matrix(p)) == p);
}

TEST_CASE("avoidance is antitone in the excluded set") {
  std::mt19937 rng(5);
  const auto pool = generate_upto(GroundSet::BinaryMatrices, 4);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int t = 0; t < 20; ++t) {
    std::vector<BinaryMatrix> small{pool[pick(rng)]};
    auto big = small;
    big.push_back(pool[pick(rng)]);
    for (auto g : {GroundSet::Polyominoes, GroundSet::BinaryMatrices}) {
      for (int r = 2; r <= 6; ++r) {
        const auto wide = members(ClassSpec(g, small), r);
        for (const auto& m : members(ClassSpec(g, big), r))
          CHECK(std::binary_search(wide.begin(), wide.end(), m));
      }
    }
  }
}

TEST_CASE("restriction of matrix classes to permutations and polyominoes") {
  const std::vector<BinaryMatrix> basis{cat::switch_main(), BinaryMatrix::from_rows({"0", "0"})};
  for (int r = 2; r <= 7; ++r) {
    std::vector<BinaryMatrix> polys;
    std::vector<BinaryMatrix> perms;
    for (const auto& m : members(ClassSpec(GroundSet::BinaryMatrices, basis), r)) {
      if (is_polyomino(m)) polys.push_back(m);
      if (r % 2 == 0 && is_permutation_matrix(m)) perms.push_back(m);
    }
    CHECK(members(ClassSpec(GroundSet::Polyominoes, basis), r) == polys);
    if (r % 2 == 0) CHECK(members(ClassSpec(GroundSet::Permutations, basis), r / 2) == perms);
  }
}

TEST_CASE("non-quasi excluded matrices do not change a permutation class") {
  const ClassSpec base(GroundSet::Permutations, {cat::m_g()});
  const ClassSpec padded(GroundSet::Permutations, {cat::m_g(), BinaryMatrix::from_rows({"11"}), cat::corner_notch()});
  CHECK(padded.warnings.size() == 2);
  for (int n = 1; n <= 6; ++n) CHECK(members(base, n) == members(padded, n));
}

TEST_CASE("member sets are downward closed for a battery of specs") {
  const std::vector<std::vector<BinaryMatrix>> specs{cat::convex_basis(), cat::lpolyomino_basis(),
                                                     cat::cprime_basis(), {cat::infinite_basis_seed()}};
  for (const auto& s : specs) CHECK(is_downward_closed(members_upto(ClassSpec(GroundSet::Polyominoes, s), 7),
                                                       GroundSet::Polyominoes).closed);
  CHECK(is_downward_closed(members_upto(ClassSpec(GroundSet::Permutations, {cat::m_f()}), 7),
                           GroundSet::Permutations).closed);
}

TEST_CASE("bordered matrices") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& tau : all_permutations(n))
      for (auto side : kAllSides) {
        const auto b = border(tau, side);
        CHECK(is_quasi_permutation(b));
        CHECK(b.ones() == n);
        const auto rs = b.row_sums();
        const auto cs = b.col_sums();
        CHECK(std::count(rs.begin(), rs.end(), 0) + std::count(cs.begin(), cs.end(), 0) == 1);
      }
}

TEST_CASE("inserting an extreme entry is a bijection onto the bordered class") {
  for (int k = 1; k <= 3; ++k)
    for (const auto& tau : all_permutations(k))
      for (auto side : kAllSides) {
        const ClassSpec base(GroundSet::Permutations, {permutation_to_matrix(tau)});
        const ClassSpec bordered(GroundSet::Permutations, {border(tau, side)});
        for (int n = 2; n <= 6; ++n) {
          std::vector<BinaryMatrix> image;
          for (const auto& m : members(base, n - 1))
            for (const auto& p : insert_extreme(matrix_to_permutation(m), side)) image.push_back(permutation_to_matrix(p));
          const auto before = image.size();
          std::sort(image.begin(), image.end());
          image.erase(std::unique(image.begin(), image.end()), image.end());
          CHECK(image.size() == before);
          CHECK(image == members(bordered, n));
        }
      }
}

TEST_CASE("reversal exchanges left and right borders") {
  for (const auto& tau : all_permutations(3)) {
    const auto right = count_sequence(ClassSpec(GroundSet::Permutations, {border(tau, BorderSide::Right)}), 7);
    const auto left =
        count_sequence(ClassSpec(GroundSet::Permutations, {border(tau.reversed(), BorderSide::Left)}), 7);
    CHECK(right.counts() == left.counts());
  }
}

TEST_CASE("123 and 1234 are told apart") {
  const auto rep = check_wilf_equivalence({Permutation::parse("123")}, {Permutation::parse("1234")}, 5);
  CHECK(!rep.all_equal);
  CHECK(rep.first_difference == 4);
}
