#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "subpat/containment.hpp"
#include "subpat/errors.hpp"
#include "subpat/permutation.hpp"
#include "subpat/shape.hpp"

using namespace subpat;

TEST_CASE("text round trip and coordinates") {
  const auto m = BinaryMatrix::from_rows({"011", "100"});
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 3);
  CHECK(m.rank() == 5);
  CHECK(m.at(1, 1));
  CHECK(!m.at(2, 1));
  CHECK(m.at(2, 3));
  CHECK(m.to_text() == "011\n100");
  CHECK(BinaryMatrix::parse("011\n100\n") == m);
  CHECK_THROWS_AS(BinaryMatrix::parse("01\n1"), ParseError);
  CHECK_THROWS_AS(BinaryMatrix::parse("0x"), ParseError);
  const auto list = parse_matrix_list("1\n\n01\n10\n\n\n111\n");
  REQUIRE(list.size() == 3);
  CHECK(parse_matrix_list(format_matrix_list(list)) == list);
}

TEST_CASE("canonical order") {
  const auto a = BinaryMatrix::from_rows({"1"});
  const auto b = BinaryMatrix::from_rows({"01"});
  const auto c = BinaryMatrix::from_rows({"10"});
  const auto d = BinaryMatrix::from_rows({"1", "0"});
  CHECK(a < b);
  CHECK(b < c);
  CHECK(c < d);
}

TEST_CASE("permutation matrices") {
  const auto one = permutation_to_matrix(Permutation::parse("1"));
  CHECK(one == BinaryMatrix::from_rows({"1"}));
  const auto id2 = permutation_to_matrix(Permutation::parse("12"));
  CHECK(id2.at(1, 1));
  CHECK(id2.at(2, 2));
  CHECK(id2.ones() == 2);

  const auto sigma = Permutation::parse("521634");
  const auto m = permutation_to_matrix(sigma);
  CHECK(m.at(5, 1));
  CHECK(m.ones() == 6);
  CHECK(matrix_to_permutation(m) == sigma);
  CHECK(Permutation::parse("5 2 1 6 3 4") == sigma);
  CHECK(matrix_to_permutation(one) == Permutation::parse("1"));
  CHECK_THROWS_AS(matrix_to_permutation(BinaryMatrix(2, 2)), NotAPermutationMatrix);
  CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);

  CHECK(sigma.inverse().inverse() == sigma);
  CHECK(permutation_to_matrix(sigma.inverse()) == m.transposed());
  CHECK(permutation_to_matrix(sigma.reversed()) == m.flipped_horizontally());
  CHECK(permutation_to_matrix(sigma.complemented()) == m.flipped_vertically());
}

TEST_CASE("containment examples") {
  const auto m312 = permutation_to_matrix(Permutation::parse("312"));
  const auto m21 = permutation_to_matrix(Permutation::parse("21"));
  const auto m12 = permutation_to_matrix(Permutation::parse("12"));
  CHECK(contains(m312, m21));

  const auto e = find_embedding(m12, m12);
  REQUIRE(e);
  CHECK(e->rows == std::vector<int>{1, 2});
  CHECK(e->cols == std::vector<int>{1, 2});

  const auto big = permutation_to_matrix(Permutation::parse("521634"));
  const auto w = find_embedding(big, m21);
  REQUIRE(w);
  CHECK(is_valid_embedding(big, m21, *w));
  CHECK(!find_embedding(m12, BinaryMatrix::from_rows({"11"})));
}

TEST_CASE("containment agrees with the subset oracle") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> bit(0, 1);
  auto random_matrix = [&](int r, int c) {
    BinaryMatrix m(r, c);
    for (int i = 1; i <= r; ++i)
      for (int j = 1; j <= c; ++j) m.set(i, j, bit(rng));
    return m;
  };
  int agree = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const auto host = random_matrix(1 + trial % 5, 1 + (trial / 5) % 5);
    const auto pat = random_matrix(1 + trial % 3, 1 + (trial / 3) % 2);
    const bool fast = contains(host, pat);
    const auto e = find_embedding(host, pat);
    CHECK(fast == oracle::contains(host, pat));
    CHECK(fast == e.has_value());
    if (e) CHECK(is_valid_embedding(host, pat, *e));
    ++agree;
  }
  CHECK(agree == 3000);
}

TEST_CASE("matrix containment of permutation matrices is classical containment") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& host : all_permutations(n))
      for (int k = 1; k <= 3; ++k)
        for (const auto& pat : all_permutations(k))
          CHECK(contains(permutation_to_matrix(host), permutation_to_matrix(pat)) ==
                oracle::perm_contains(host, pat));
}

TEST_CASE("polyomino and quasi-permutation predicates") {
  CHECK(is_polyomino(BinaryMatrix::from_rows({"1"})));
  CHECK(!is_polyomino(BinaryMatrix::from_rows({"10", "01"})));
  CHECK(!is_polyomino(BinaryMatrix::from_rows({"01", "10"})));
  CHECK(is_polyomino(BinaryMatrix::from_rows({"01", "11"})));
  CHECK(!is_polyomino(BinaryMatrix::from_rows({"11", "00"})));
  CHECK(is_quasi_permutation(BinaryMatrix::from_rows({"1"})));
  CHECK(!is_quasi_permutation(BinaryMatrix::from_rows({"11"})));

  for (int r = 1; r <= 4; ++r)
    for (int c = 1; c <= 4; ++c)
      for (const auto& m : oracle::all_matrices(r, c)) CHECK(is_polyomino(m) == oracle::is_polyomino(m));

  for (int n = 1; n <= 5; ++n)
    for (const auto& p : all_permutations(n)) {
      const auto m = permutation_to_matrix(p);
      for (int rmask = 1; rmask < (1 << n); ++rmask)
        for (int cmask = 1; cmask < (1 << n); cmask += 3) {
          std::vector<int> rs, cs;
          for (int i = 0; i < n; ++i) {
            if ((rmask >> i) & 1) rs.push_back(i + 1);
            if ((cmask >> i) & 1) cs.push_back(i + 1);
          }
          CHECK(is_quasi_permutation(m.submatrix(rs, cs)));
        }
    }
}
