#include <doctest.h>

#include "oracles.hpp"
#include "subpat/catalog.hpp"
#include "subpat/classes.hpp"
#include "subpat/errors.hpp"
#include "subpat/genum.hpp"
#include "subpat/polygeo.hpp"
#include "subpat/shape.hpp"

using namespace subpat;
namespace cat = subpat::catalog;

namespace {

BinaryMatrix M(std::initializer_list<std::string_view> rows) { return BinaryMatrix::from_rows(rows); }

bool directed_oracle(const BinaryMatrix& p) {
  for (int sr = 1; sr <= p.rows(); ++sr)
    for (int sc = 1; sc <= p.cols(); ++sc) {
      if (!p.at(sr, sc)) continue;
      std::vector<std::vector<char>> reach(p.rows() + 1, std::vector<char>(p.cols() + 1, 0));
      reach[sr][sc] = 1;
      int n = 0;
      for (int r = sr; r <= p.rows(); ++r)
        for (int c = sc; c <= p.cols(); ++c) {
          if (!p.at(r, c)) continue;
          if ((r > sr && reach[r - 1][c]) || (c > sc && reach[r][c - 1])) reach[r][c] = 1;
          n += reach[r][c];
        }
      if (n == p.ones()) return true;
    }
  return false;
}

// Largest, over cell pairs, of the fewest turns on a monotone path; brute force over
// every monotone path via memoized search keyed by (cell, heading).
std::optional<int> degree_oracle(const BinaryMatrix& p) {
  const int R = p.rows();
  const int C = p.cols();
  int worst = 0;
  constexpr int kInf = 1 << 20;
  for (int ar = 1; ar <= R; ++ar)
    for (int ac = 1; ac <= C; ++ac)
      for (int br = 1; br <= R; ++br)
        for (int bc = 1; bc <= C; ++bc) {
          if (!p.at(ar, ac) || !p.at(br, bc)) continue;
          const int dr = br >= ar ? 1 : -1;
          const int dc = bc >= ac ? 1 : -1;
          // best[r][c][h]: fewest turns reaching (r,c) with last step vertical (0) or horizontal (1)
          std::vector<std::vector<std::array<int, 2>>> best(R + 1, std::vector<std::array<int, 2>>(C + 1, {kInf, kInf}));
          best[ar][ac] = {0, 0};
          for (int r = ar; r != br + dr; r += dr)
            for (int c = ac; c != bc + dc; c += dc) {
              if (!p.at(r, c) || (r == ar && c == ac)) continue;
              if (r != ar && p.at(r - dr, c)) {
                const auto& f = best[r - dr][c];
                best[r][c][0] = std::min(best[r][c][0], std::min(f[0], f[1] + 1));
              }
              if (c != ac && p.at(r, c - dc)) {
                const auto& f = best[r][c - dc];
                best[r][c][1] = std::min(best[r][c][1], std::min(f[1], f[0] + 1));
              }
            }
          int d = std::min(best[br][bc][0], best[br][bc][1]);
          if (ar == br && ac == bc) d = 0;
          if (d >= kInf) return std::nullopt;
          worst = std::max(worst, d);
        }
  return worst;
}

}  // namespace

TEST_CASE("convexity and directedness") {
  CHECK(is_convex(M({"11", "11"})));
  CHECK(!is_h_convex(M({"111", "101", "111"})));
  CHECK(is_v_convex(M({"111", "101", "111"})) == false);
  CHECK(!is_h_convex(M({"101", "111"})));
  CHECK(is_directed(M({"1"})));
  CHECK(is_directed_convex(M({"11", "11"})));
  CHECK(is_directed_convex(M({"10", "11"})));
  CHECK(!is_directed_convex(M({"11", "01"})));
  CHECK(is_directed(M({"111", "101", "111"})));
  for (int r = 2; r <= 8; ++r)
    for (const auto& p : generate(GroundSet::Polyominoes, r)) {
      CHECK(is_directed(p) == directed_oracle(p));
      CHECK(is_convex(p) == (!oracle::contains(p, cat::row_gap()) && !oracle::contains(p, cat::column_gap())));
    }
}

TEST_CASE("parallelogram polyominoes") {
  CHECK(is_parallelogram(M({"111", "111"})));
  CHECK(is_parallelogram(M({"01", "11"})));
  CHECK(!is_parallelogram(M({"10", "11"})));
  CHECK(!is_parallelogram(M({"11", "01"})));
  CHECK(is_parallelogram(M({"011", "110"})));
  CHECK(!is_parallelogram(M({"110", "011"})));
}

TEST_CASE("convexity degree") {
  CHECK(convexity_degree(M({"111", "111"})) == 1);
  CHECK(convexity_degree(M({"1"})) == 0);
  CHECK(convexity_degree(M({"111"})) == 0);
  CHECK(!convexity_degree(M({"101", "111"})));
  for (int r = 2; r <= 8; ++r)
    for (const auto& p : generate(GroundSet::Polyominoes, r)) CHECK(convexity_degree(p) == degree_oracle(p));
}

TEST_CASE("projections and uniqueness") {
  CHECK(projections(M({"1"})) == Projections{{1}, {1}});
  CHECK(projections(M({"01", "10"})) == Projections{{1, 1}, {1, 1}});
  CHECK(projections(M({"11", "01"})) == Projections{{1, 2}, {1, 2}});
  CHECK(is_unique_for_projections(M({"111", "111"})));
  CHECK(!is_unique_for_projections(M({"01", "10"})));
  CHECK_THROWS_AS(is_unique_for_projections(BinaryMatrix(6, 6)), BudgetExceeded);
  for (int r = 1; r <= 3; ++r)
    for (int c = 1; c <= 3; ++c)
      for (const auto& m : oracle::all_matrices(r, c))
        CHECK(is_unique_for_projections(m) == (oracle::count_same_projections(m) == 1));
}

TEST_CASE("comparable rows and columns, boundary contact, C'") {
  CHECK(rows_columns_comparable(M({"110", "111", "111"})));
  // T-tetromino: bar row contains the stem row, columns nested as well
  CHECK(rows_columns_comparable(M({"111", "010"})));
  CHECK(!rows_columns_comparable(M({"110", "011"})));
  CHECK(boundary_contact(M({"11", "11"})));
  CHECK(in_c_prime(M({"11", "11"})));
  const auto plus = M({"010", "111", "010"});
  CHECK(!boundary_contact(plus));
  CHECK(!in_c_prime(plus));

  const auto one = embed_permutation_in_c_prime(Permutation::parse("1"));
  CHECK(one.rows() == 2);
  CHECK(one.ones() == 3);
  CHECK(is_polyomino(one));
  CHECK(in_c_prime(one));
  const auto eight = embed_permutation_in_c_prime(Permutation::parse("2413"));
  CHECK(eight.rows() == 8);
  CHECK(eight.cols() == 8);
  CHECK(is_polyomino(eight));
  CHECK(in_c_prime(eight));
  CHECK(!oracle::contains(eight, cat::isolated_in_column()));
}

TEST_CASE("convex polyomino stream") {
  for (int r = 2; r <= 9; ++r) {
    std::vector<BinaryMatrix> got;
    for_each_convex_polyomino(r, [&](const BinaryMatrix& m) { got.push_back(m); });
    std::sort(got.begin(), got.end());
    CHECK(got == members(ClassSpec(GroundSet::Polyominoes, cat::convex_basis()), r));
  }
}

TEST_CASE("non-class witnesses") {
  const auto d = find_directed_non_class_witness(8);
  REQUIRE(d);
  CHECK(is_directed(d->host));
  CHECK(!is_directed(d->sub));
  CHECK(is_polyomino(d->sub));
  CHECK(oracle::contains(d->host, d->sub));

  const auto t = find_two_convex_non_class_witness(12);
  REQUIRE(t);
  CHECK(convexity_degree(t->host) <= 2);
  CHECK(convexity_degree(t->sub) == 3);
  CHECK(is_polyomino(t->sub));
  CHECK(oracle::contains(t->host, t->sub));

  CHECK(!find_convex_host(cat::convex_extra_obstruction(), 10));
  CHECK(find_convex_host(M({"01", "10"}), 10));
}
