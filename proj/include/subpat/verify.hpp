#pragma once

#include <optional>
#include <string>
#include <vector>

#include "subpat/matrix.hpp"

namespace subpat {

struct CheckResult {
  std::string id;
  /// Human-readable bound, e.g. "rank<=9".
  std::string bound;
  std::uint64_t checked = 0;
  bool pass = false;
  /// Extra key=value facts (counts, witnesses).
  std::vector<std::pair<std::string, std::string>> details;
};

struct SuiteReport {
  std::string name;
  int version = 1;
  std::vector<CheckResult> checks;

  bool pass() const;
  std::string to_text() const;
  std::string to_json() const;
};

struct SuiteOptions {
  /// Zero selects the suite default.
  int max_rank = 0;
  int max_size = 0;
  int shards = 1;
};

std::vector<std::string> suite_names();
/// Throws std::invalid_argument for unknown names.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts = {});

/// Members of a staircase family of polyominoes with the given rank: a top
/// run of t cells, then a two-cell step per row, closed by a bottom row
/// touching columns 1, 2 and the last column.
std::vector<BinaryMatrix> staircase_candidates(int rank);

}  // namespace subpat
