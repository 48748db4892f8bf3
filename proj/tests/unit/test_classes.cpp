#include <doctest.h>

#include <filesystem>

#include "oracles.hpp"
#include "subpat/cache.hpp"
#include "subpat/catalog.hpp"
#include "subpat/classes.hpp"
#include "subpat/errors.hpp"
#include "subpat/polygeo.hpp"
#include "subpat/shape.hpp"

using namespace subpat;
namespace cat = subpat::catalog;

namespace {

// 0-cells that no 4-connected path of 0s links to the outside.
bool has_hole(const BinaryMatrix& m) {
  const int R = m.rows() + 2;
  const int C = m.cols() + 2;
  std::vector<char> open(static_cast<std::size_t>(R * C), 0);
  auto zero = [&](int r, int c) { return r == 0 || c == 0 || r == R - 1 || c == C - 1 || !m.at(r, c); };
  std::vector<std::pair<int, int>> stack{{0, 0}};
  open[0] = 1;
  while (!stack.empty()) {
    auto [r, c] = stack.back();
    stack.pop_back();
    const int dr[] = {1, -1, 0, 0};
    const int dc[] = {0, 0, 1, -1};
    for (int d = 0; d < 4; ++d) {
      const int nr = r + dr[d];
      const int nc = c + dc[d];
      if (nr < 0 || nc < 0 || nr >= R || nc >= C || open[nr * C + nc] || !zero(nr, nc)) continue;
      open[nr * C + nc] = 1;
      stack.emplace_back(nr, nc);
    }
  }
  for (int r = 1; r < R - 1; ++r)
    for (int c = 1; c < C - 1; ++c)
      if (!m.at(r, c) && !open[r * C + c]) return true;
  return false;
}

std::vector<BinaryMatrix> polys_upto(int rmax, bool (*keep)(const BinaryMatrix&)) {
  std::vector<BinaryMatrix> out;
  for (const auto& m : generate_upto(GroundSet::Polyominoes, rmax))
    if (keep(m)) out.push_back(m);
  return out;
}

}  // namespace

TEST_CASE("class spec basics") {
  const ClassSpec c(GroundSet::Permutations, {cat::m_f(), cat::m_f()});
  CHECK(c.excluded.size() == 1);
  CHECK(c.serialize() == "ground permutations\n001\n100\n");
  CHECK(spec_hash_hex(c).size() == 16);
  CHECK(spec_hash(c) == fnv1a64(c.serialize()));
  const ClassSpec w(GroundSet::Permutations, {BinaryMatrix::from_rows({"11"})});
  CHECK(!w.warnings.empty());
  CHECK(MatrixSet({cat::q1(), cat::q2()}).antichain_verified());
}

TEST_CASE("avoidance examples") {
  const auto s1 = BinaryMatrix::from_rows({"01", "10"});
  const ClassSpec c1(GroundSet::Polyominoes, {s1});
  CHECK(avoids(c1, BinaryMatrix::from_rows({"110", "111", "011"})));
  CHECK(!avoids(c1, BinaryMatrix::from_rows({"011", "110"})));
  CHECK_THROWS_AS(avoids(c1, s1), WrongGroundSet);

  const ClassSpec f(GroundSet::Permutations, {cat::m_f()});
  CHECK(avoids(f, cat::perm("321")));
  const ClassSpec g(GroundSet::Permutations, {cat::m_g()});
  CHECK(avoids(g, cat::perm("12")));
  CHECK(!avoids(g, cat::perm("132")));
}

TEST_CASE("members examples") {
  const ClassSpec a(GroundSet::Permutations, cat::perms({"321", "231", "312"}));
  auto want = cat::perms({"123", "132", "213"});
  std::sort(want.begin(), want.end());
  CHECK(members(a, 3) == want);

  const ClassSpec v(GroundSet::Polyominoes, {BinaryMatrix::from_rows({"11"})});
  CHECK(members(v, 5) == std::vector{BinaryMatrix::from_rows({"1", "1", "1", "1"})});

  CHECK(members(ClassSpec(GroundSet::Permutations, {}), 3).size() == 6);
}

TEST_CASE("members match the brute-force filter") {
  const auto excluded = cat::lconvex_basis();
  const ClassSpec c(GroundSet::Polyominoes, excluded);
  for (int r = 2; r <= 8; ++r) {
    std::vector<BinaryMatrix> want;
    for (const auto& m : generate(GroundSet::Polyominoes, r)) {
      bool ok = true;
      for (const auto& e : excluded) ok = ok && !oracle::contains(m, e);
      if (ok) want.push_back(m);
    }
    CHECK(members(c, r) == want);
    CHECK(members(c, r, 3) == want);
  }
}

TEST_CASE("count sequences") {
  auto counts = [](const ClassSpec& c, int n) { return count_sequence(c, n).counts(); };
  CHECK(counts(ClassSpec(GroundSet::Permutations, {cat::m_f()}), 8) ==
        std::vector<std::uint64_t>{1, 2, 3, 5, 8, 13, 21, 34});
  CHECK(counts(ClassSpec(GroundSet::Permutations, {cat::m_h()}), 7) ==
        std::vector<std::uint64_t>{1, 2, 6, 20, 70, 252, 924});
  CHECK(counts(ClassSpec(GroundSet::Permutations, {}), 3) == std::vector<std::uint64_t>{1, 2, 6});

  const auto seq = count_sequence(ClassSpec(GroundSet::Permutations, cat::perms({"123"})), 4);
  CHECK(seq.to_csv() == "rank,count\n1,1\n2,2\n3,5\n4,14\n");
  CHECK(seq.to_bfile() == "1 1\n2 2\n3 5\n4 14\n");
  CHECK(seq.at(4) == 14U);
  CHECK(!seq.at(9));

  CHECK_THROWS_AS(count_sequence(ClassSpec(GroundSet::Polyominoes, {}), 30), BudgetExceeded);
  CountOptions big;
  big.budget = 9;
  CHECK(count_sequence(ClassSpec(GroundSet::Polyominoes, {}), 9, big).at(9) == 211520U);
}

TEST_CASE("count cache") {
  const auto dir = std::filesystem::temp_directory_path() / "subpat-unit-cache";
  std::filesystem::remove_all(dir);
  const ClassSpec c(GroundSet::Polyominoes, cat::convex_basis());
  CountOptions opts;
  opts.cache_dir = dir;
  const auto first = count_sequence(c, 8, opts);
  CHECK(std::filesystem::exists(dir));
  const CountCache cache(dir);
  CHECK(cache.get(spec_hash(c), 8) == first.at(8));
  // a poisoned entry is served back, proving the cache is read
  cache.put(spec_hash(c), 8, 12345);
  CHECK(count_sequence(c, 8, opts).at(8) == 12345U);
  CHECK(count_sequence(c, 8).at(8) == first.at(8));
  std::filesystem::remove_all(dir);
}

TEST_CASE("bounded class comparison") {
  const ClassSpec a(GroundSet::Permutations, cat::perms({"321", "231", "312"}));
  const ClassSpec a1(GroundSet::Permutations, {cat::q1()});
  const ClassSpec a2(GroundSet::Permutations, {cat::q2()});
  CHECK(equal_classes(a1, a2, 7).equal);
  CHECK(equal_classes(a1, a, 7).equal);
  const auto r = equal_classes(ClassSpec(GroundSet::Permutations, {cat::m_f()}),
                               ClassSpec(GroundSet::Permutations, cat::perms({"123", "132", "213"})), 8);
  CHECK(r.equal);
  CHECK(r.verified_upto == 8);

  const ClassSpec w3(GroundSet::Polyominoes, {BinaryMatrix::from_rows({"011"}), BinaryMatrix::from_rows({"111"})});
  const ClassSpec w4(GroundSet::Polyominoes, {BinaryMatrix::from_rows({"110"}), BinaryMatrix::from_rows({"111"})});
  CHECK(equal_classes(w3, w4, 10).equal);

  const auto diff = equal_classes(a1, ClassSpec(GroundSet::Permutations, cat::perms({"321"})), 5);
  CHECK(!diff.equal);
  REQUIRE(diff.witness);
  CHECK(diff.witness->rows() == 3);
  CHECK_THROWS_AS(equal_classes(a1, w3, 4), WrongGroundSet);
}

TEST_CASE("downward closure") {
  const auto hv = members_upto(ClassSpec(GroundSet::Polyominoes, cat::convex_basis()), 8);
  CHECK(is_downward_closed(hv, GroundSet::Polyominoes).closed);

  const auto directed = polys_upto(8, [](const BinaryMatrix& m) { return is_directed(m); });
  const auto d = is_downward_closed(directed, GroundSet::Polyominoes);
  CHECK(!d.closed);
  REQUIRE(d.missing);
  CHECK(!is_directed(*d.missing));

  const auto holeless = polys_upto(8, [](const BinaryMatrix& m) { return !has_hole(m); });
  const auto h = is_downward_closed(holeless, GroundSet::Polyominoes);
  CHECK(!h.closed);
  REQUIRE(h.missing);
  CHECK(has_hole(*h.missing));
}
