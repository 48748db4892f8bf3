#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "subpat/classes.hpp"
#include "subpat/permutation.hpp"

namespace subpat {

enum class BorderSide { Top, Bottom, Left, Right };

inline constexpr std::array<BorderSide, 4> kAllSides{BorderSide::Top, BorderSide::Bottom, BorderSide::Left,
                                                     BorderSide::Right};

std::string_view to_string(BorderSide s) noexcept;
std::optional<BorderSide> parse_border_side(std::string_view text) noexcept;

/// The permutation matrix of tau with one all-zero line added on `side`.
BinaryMatrix border(const Permutation& tau, BorderSide side);

/// Removes the maximum (Top), minimum (Bottom), first (Left) or last (Right)
/// entry and standardizes what is left. Needs size >= 2.
Permutation decompose_extreme(const Permutation& sigma, BorderSide side);

/// Inverse direction: all ways of adding an extreme entry on `side`.
std::vector<Permutation> insert_extreme(const Permutation& sigma, BorderSide side);

struct BorderedCount {
  /// Counts of Av({border(tau, side)}) for sizes 1..nmax.
  CountSequence bordered;
  /// Counts of Av(tau_set) for sizes 1..nmax.
  CountSequence base;
  /// bordered(n) == n * base(n - 1) for 2 <= n <= nmax.
  bool holds = true;
  std::optional<int> first_failure;
};

BorderedCount check_bordered_count(const std::vector<Permutation>& tau_set, BorderSide side, int nmax,
                                   const CountOptions& opts = {});

struct WilfReport {
  int nmax = 0;
  /// Eight sequences: b1 with each side, then b2 with each side.
  std::vector<std::string> labels;
  std::vector<CountSequence> sequences;
  bool all_equal = true;
  std::optional<int> first_difference;
};

WilfReport check_wilf_equivalence(const std::vector<Permutation>& b1, const std::vector<Permutation>& b2, int nmax,
                                  const CountOptions& opts = {});

}  // namespace subpat
