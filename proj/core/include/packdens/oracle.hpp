#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "packdens/diff_set.hpp"
#include "packdens/int_set.hpp"
#include "packdens/rational.hpp"

namespace packdens {

struct OracleOptions {
  /// Largest window width (diam(S)) the automaton may use.
  int width_cap = 24;
};

/// Graph of admissible bit windows. A state is the membership of the last
/// `width` positions, bit i holding the position i+1 steps back. Appending a
/// bit shifts it in at bit 0; appending 1 is legal iff no 1 sits at a
/// distance in diff(S)\{0}.
struct ShiftAutomaton {
  static constexpr std::int32_t kNoEdge = -1;

  int width = 0;
  std::vector<std::uint32_t> windows;             // state index -> window bits
  std::vector<std::array<std::int32_t, 2>> next;  // next[state][bit]; state 0 is the empty window

  std::size_t size() const noexcept { return windows.size(); }
};

struct DensityResult {
  Rational density;
  std::vector<std::uint32_t> witness_cycle;  // windows visited, starting state first
  std::int64_t witness_period = 1;
  std::vector<bool> witness_pattern;         // bits appended along the cycle
  std::size_t states = 1;

  std::string pattern_string() const;
};

/// Reachable states from the empty window. Requires diam(S) >= 1; throws
/// std::invalid_argument if diam(S) exceeds the width cap.
ShiftAutomaton build_automaton(const IntSet& s, const OracleOptions& options = {});

/// Exact maximum cycle mean, with a witness cycle of minimal length.
/// Among minimal witnesses the pattern is reported in its lexicographically
/// greatest rotation, and the greatest such pattern is chosen.
/// Requires state 0 to reach every state and every state to have an out-edge.
DensityResult max_mean_cycle(const ShiftAutomaton& g);

/// d_p(S), cross-checked at runtime against the closed-form bounds, the greedy
/// density, and a packing check of the tiled witness. A failed cross-check
/// throws std::logic_error.
DensityResult exact_packing_density(const IntSet& s, const OracleOptions& options = {});

/// True iff the two-sided periodic set with this pattern is S-packing,
/// decided with is_packing over enough tiled periods to see every difference
/// up to diam(S).
bool periodic_pattern_is_packing(const std::vector<bool>& pattern, const DiffSet& d);

/// Best density over all periodic patterns with period <= max_period.
/// Exhaustive; max_period must lie in [1, 20].
Rational brute_force_periodic(const IntSet& s, int max_period);

}  // namespace packdens
