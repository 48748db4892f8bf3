#include <doctest.h>

#include "oracles.hpp"
#include "subpat/classes.hpp"
#include "subpat/wilfkit.hpp"

using namespace subpat;

TEST_CASE("bordering") {
  const auto tau = Permutation::parse("12");
  CHECK(border(tau, BorderSide::Top) == BinaryMatrix::from_rows({"00", "01", "10"}));
  CHECK(border(tau, BorderSide::Bottom) == BinaryMatrix::from_rows({"01", "10", "00"}));
  CHECK(border(tau, BorderSide::Left) == BinaryMatrix::from_rows({"001", "010"}));
  CHECK(border(tau, BorderSide::Right) == BinaryMatrix::from_rows({"010", "100"}));
  CHECK(parse_border_side("left") == BorderSide::Left);
  CHECK(to_string(BorderSide::Bottom) == "bottom");
}

TEST_CASE("extreme decomposition") {
  CHECK(decompose_extreme(Permutation::parse("4123"), BorderSide::Top) == Permutation::parse("123"));
  CHECK(decompose_extreme(Permutation::parse("1423"), BorderSide::Top) == Permutation::parse("123"));
  CHECK(decompose_extreme(Permutation::parse("2413"), BorderSide::Bottom) == Permutation::parse("132"));
  CHECK(decompose_extreme(Permutation::parse("2413"), BorderSide::Left) == Permutation::parse("312"));
  CHECK(decompose_extreme(Permutation::parse("2413"), BorderSide::Right) == Permutation::parse("231"));
  CHECK_THROWS(decompose_extreme(Permutation::parse("1"), BorderSide::Top));
  for (auto side : kAllSides) {
    const auto sigma = Permutation::parse("31524");
    const auto grown = insert_extreme(sigma, side);
    CHECK(grown.size() == 6);
    for (const auto& g : grown) CHECK(decompose_extreme(g, side) == sigma);
  }
}

TEST_CASE("bordered classes count n times the base class") {
  const auto b = check_bordered_count({Permutation::parse("123")}, BorderSide::Top, 7);
  CHECK(b.holds);
  CHECK(b.bordered.at(4) == 20U);
  CHECK(b.base.at(3) == 5U);

  // the bordered count against a direct brute-force count
  const auto tau = Permutation::parse("132");
  for (auto side : kAllSides) {
    const auto bm = border(tau, side);
    const auto seq = count_sequence(ClassSpec(GroundSet::Permutations, {bm}), 6);
    for (int n = 1; n <= 6; ++n) {
      std::uint64_t want = 0;
      for (const auto& p : all_permutations(n)) want += !oracle::contains(permutation_to_matrix(p), bm);
      CHECK(seq.at(n) == want);
    }
    CHECK(check_bordered_count({tau}, side, 7).holds);
  }
}

TEST_CASE("Wilf-equivalent bases stay equivalent after bordering") {
  const auto rep = check_wilf_equivalence({Permutation::parse("123")}, {Permutation::parse("132")}, 7);
  CHECK(rep.all_equal);
  CHECK(rep.labels.size() == 8);
  CHECK(rep.sequences.size() == 8);
  const auto not_equiv = check_wilf_equivalence({Permutation::parse("1234")}, {Permutation::parse("1342")}, 7);
  CHECK(!not_equiv.all_equal);
  CHECK(not_equiv.first_difference == 7);
}
