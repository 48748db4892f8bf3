#pragma once

#include <vector>

#include "subpat/matrix.hpp"
#include "subpat/permutation.hpp"

// Named matrices used throughout the tests, the verification suites and the
// CLI. All literals are written top row first.
namespace subpat::catalog {

inline BinaryMatrix perm(const char* one_line) { return permutation_to_matrix(Permutation::parse(one_line)); }

inline std::vector<BinaryMatrix> perms(std::initializer_list<const char*> one_lines) {
  std::vector<BinaryMatrix> out;
  for (const char* p : one_lines) out.push_back(perm(p));
  return out;
}

// Permutation classes.
inline BinaryMatrix m_f() { return BinaryMatrix::from_rows({"001", "100"}); }
inline BinaryMatrix m_g() { return BinaryMatrix::from_rows({"010", "100"}); }
inline BinaryMatrix m_h() { return BinaryMatrix::from_rows({"000", "001", "010", "100"}); }
inline BinaryMatrix m_j() { return BinaryMatrix::from_rows({"000", "010", "001", "100"}); }
inline BinaryMatrix m_k() { return BinaryMatrix::from_rows({"000", "001", "100", "010"}); }
inline BinaryMatrix q1() { return BinaryMatrix::from_rows({"10", "00", "01"}); }
inline BinaryMatrix q2() { return BinaryMatrix::from_rows({"100", "001"}); }

// Polyomino obstructions.
inline BinaryMatrix row_gap() { return BinaryMatrix::from_rows({"101"}); }
inline BinaryMatrix column_gap() { return BinaryMatrix::from_rows({"1", "0", "1"}); }
inline BinaryMatrix corner_notch() { return BinaryMatrix::from_rows({"11", "01"}); }
inline BinaryMatrix switch_main() { return BinaryMatrix::from_rows({"10", "01"}); }
inline BinaryMatrix switch_anti() { return BinaryMatrix::from_rows({"01", "10"}); }
inline BinaryMatrix isolated_in_column() { return BinaryMatrix::from_rows({"0", "1", "0"}); }
inline BinaryMatrix isolated_in_row() { return BinaryMatrix::from_rows({"010"}); }
inline BinaryMatrix stair_up() { return BinaryMatrix::from_rows({"10", "11"}); }
inline BinaryMatrix stair_down() { return BinaryMatrix::from_rows({"11", "01"}); }
inline BinaryMatrix infinite_basis_seed() { return BinaryMatrix::from_rows({"1001", "1101"}); }
inline BinaryMatrix convex_extra_obstruction() { return BinaryMatrix::from_rows({"001", "100", "010"}); }

inline std::vector<BinaryMatrix> convex_basis() { return {row_gap(), column_gap()}; }
inline std::vector<BinaryMatrix> directed_convex_basis() { return {row_gap(), column_gap(), corner_notch()}; }
inline std::vector<BinaryMatrix> parallelogram_basis() { return {stair_up(), stair_down()}; }
inline std::vector<BinaryMatrix> lconvex_basis() { return {row_gap(), column_gap(), switch_main(), switch_anti()}; }
inline std::vector<BinaryMatrix> lpolyomino_basis() { return {switch_main(), switch_anti()}; }
inline std::vector<BinaryMatrix> cprime_basis() { return {isolated_in_column(), isolated_in_row()}; }

}  // namespace subpat::catalog
