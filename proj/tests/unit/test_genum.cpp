#include <doctest.h>

#include "oracles.hpp"
#include "subpat/genum.hpp"
#include "subpat/permutation.hpp"
#include "subpat/shape.hpp"

using namespace subpat;

namespace {
bool any_matrix(const BinaryMatrix&) { return true; }
bool poly(const BinaryMatrix& m) { return oracle::is_polyomino(m); }
bool quasi(const BinaryMatrix& m) { return is_quasi_permutation(m); }
}  // namespace

TEST_CASE("ground set names") {
  CHECK(parse_ground_set("poly") == GroundSet::Polyominoes);
  CHECK(parse_ground_set("perm") == GroundSet::Permutations);
  CHECK(!parse_ground_set("cats"));
  CHECK(min_rank(GroundSet::Permutations) == 1);
  CHECK(min_rank(GroundSet::BinaryMatrices) == 2);
}

TEST_CASE("small generation examples") {
  CHECK(generate(GroundSet::Permutations, 3).size() == 6);
  const auto bin2 = generate(GroundSet::BinaryMatrices, 2);
  CHECK(bin2 == std::vector<BinaryMatrix>{BinaryMatrix::from_rows({"0"}), BinaryMatrix::from_rows({"1"})});

  const auto perms2 = generate_upto(GroundSet::Permutations, 2);
  CHECK(perms2.size() == 3);

  // 1x2 and 2x1 quasi matrices plus the two 1x1 ones
  const auto q3 = generate_upto(GroundSet::QuasiPermutationMatrices, 3);
  CHECK(q3.size() == 8);
  for (const auto& m : q3) CHECK(is_quasi_permutation(m));

  // bars, square and four L-trominoes
  const auto p4 = generate(GroundSet::Polyominoes, 4);
  CHECK(p4.size() == 7);
}

TEST_CASE("generation matches the brute-force filter") {
  for (int r = 2; r <= 7; ++r) {
    CHECK(generate(GroundSet::Polyominoes, r) == oracle::all_of_rank(r, poly));
    CHECK(generate(GroundSet::QuasiPermutationMatrices, r) == oracle::all_of_rank(r, quasi));
  }
  for (int r = 2; r <= 6; ++r) CHECK(generate(GroundSet::BinaryMatrices, r) == oracle::all_of_rank(r, any_matrix));
  for (int n = 1; n <= 6; ++n) {
    std::vector<BinaryMatrix> want;
    for (const auto& p : all_permutations(n)) want.push_back(permutation_to_matrix(p));
    std::sort(want.begin(), want.end());
    CHECK(generate(GroundSet::Permutations, n) == want);
  }
}

TEST_CASE("polyomino counts by semi-perimeter") {
  const std::vector<std::uint64_t> want{1, 2, 7, 32, 191, 1494, 15409, 211520};
  for (int r = 2; r <= 9; ++r) CHECK(count_elements(GroundSet::Polyominoes, r) == want[r - 2]);
}

TEST_CASE("sharded output is identical") {
  for (int shards : {2, 3, 5}) {
    GenerateOptions opts;
    opts.shards = shards;
    CHECK(generate(GroundSet::Polyominoes, 8, opts) == generate(GroundSet::Polyominoes, 8));
    CHECK(generate(GroundSet::Permutations, 6, opts) == generate(GroundSet::Permutations, 6));
    CHECK(count_elements(GroundSet::BinaryMatrices, 6, {}, opts) == count_elements(GroundSet::BinaryMatrices, 6));
  }
}

TEST_CASE("box enumeration") {
  std::size_t n = 0;
  for_each_in_box(GroundSet::Polyominoes, 2, 3, [&](const BinaryMatrix& m) {
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 3);
    ++n;
  });
  std::size_t want = 0;
  for (const auto& m : oracle::all_matrices(2, 3)) want += oracle::is_polyomino(m);
  CHECK(n == want);
}

TEST_CASE("poset utilities") {
  const auto m12 = permutation_to_matrix(Permutation::parse("12"));
  const auto m123 = permutation_to_matrix(Permutation::parse("123"));
  CHECK(minimal_elements(std::vector{m12, m123}) == std::vector{m12});
  const auto z = BinaryMatrix::from_rows({"0"});
  const auto zz = BinaryMatrix::from_rows({"00"});
  const auto zcol = BinaryMatrix::from_rows({"0", "0"});
  CHECK(minimal_elements(std::vector{z, zz, zcol}) == std::vector{z});
  CHECK(!is_antichain(std::vector{z, zz}));
  CHECK(is_antichain(std::vector{zz, zcol}));
  CHECK(is_antichain(std::vector{BinaryMatrix::from_rows({"10", "00", "01"}), BinaryMatrix::from_rows({"100", "001"})}));
  const std::vector<BinaryMatrix> w{zz, BinaryMatrix::from_rows({"011"}), BinaryMatrix::from_rows({"101"}),
                                    BinaryMatrix::from_rows({"110"}), BinaryMatrix::from_rows({"111"})};
  CHECK(is_antichain(w));

  CHECK(lower_covers(GroundSet::Permutations, m123) == std::vector{m12});
  const auto sq = BinaryMatrix::from_rows({"11", "11"});
  CHECK(lower_covers(GroundSet::Polyominoes, sq) ==
        std::vector{BinaryMatrix::from_rows({"11"}), BinaryMatrix::from_rows({"1", "1"})});

  // proper_subelements against brute force over row and column subsets
  const auto host = BinaryMatrix::from_rows({"110", "011", "111"});
  std::vector<BinaryMatrix> want;
  for (int k = 1; k <= 3; ++k)
    for (int l = 1; l <= 3; ++l)
      for (const auto& rs : oracle::subsets(3, k))
        for (const auto& cs : oracle::subsets(3, l)) {
          if (k == 3 && l == 3) continue;
          const auto s = host.submatrix(rs, cs);
          if (oracle::is_polyomino(s)) want.push_back(s);
        }
  std::sort(want.begin(), want.end());
  want.erase(std::unique(want.begin(), want.end()), want.end());
  CHECK(proper_subelements(GroundSet::Polyominoes, host) == want);
}
