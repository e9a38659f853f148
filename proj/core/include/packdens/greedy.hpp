#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "packdens/diff_set.hpp"
#include "packdens/int_set.hpp"
#include "packdens/rational.hpp"

namespace packdens {

/// Thrown when a search runs past its configured state budget.
class BudgetExhausted : public std::runtime_error {
 public:
  BudgetExhausted(const std::string& what, std::uint64_t explored)
      : std::runtime_error(what), explored_(explored) {}
  std::uint64_t explored() const noexcept { return explored_; }

 private:
  std::uint64_t explored_;
};

struct GreedyOptions {
  /// Maximum number of window positions examined before giving up.
  std::uint64_t state_budget = std::uint64_t{1} << 24;
};

/// A forward-periodic anchor: membership[anchor + i] == membership[anchor + i + period]
/// for all i >= 0.
struct Recurrence {
  std::int64_t anchor = 0;
  std::int64_t period = 1;
  friend bool operator==(const Recurrence&, const Recurrence&) = default;
};

/// Output of the greedy rule over positions [0, horizon).
struct GreedyTrace {
  IntSet source;                      // S, normalized
  std::vector<std::int64_t> chosen;   // t_0 < t_1 < ...
  std::vector<bool> membership;       // membership[x] for 0 <= x < horizon
  /// First window recurrence whose windows both fit below the horizon, if any.
  std::optional<Recurrence> recurrence;

  std::int64_t horizon() const noexcept { return static_cast<std::int64_t>(membership.size()); }
};

/// Membership bits of positions t, t+1, ..., t+width-1.
struct WindowState {
  std::vector<bool> bits;
  friend bool operator==(const WindowState&, const WindowState&) = default;
};

/// Window of width diam(S) starting at t. Requires t + diam(S) <= horizon.
WindowState window_at(const GreedyTrace& trace, std::int64_t t);

/// Two-sided periodic set: x is a member iff pattern[(x - anchor) mod period].
class PeriodicSet {
 public:
  PeriodicSet(std::int64_t anchor, std::vector<bool> pattern);

  std::int64_t anchor() const noexcept { return anchor_; }
  std::int64_t period() const noexcept { return static_cast<std::int64_t>(pattern_.size()); }
  const std::vector<bool>& pattern() const noexcept { return pattern_; }
  const Rational& density() const noexcept { return density_; }

  /// Residue r(x) in [0, period) with x - anchor ≡ r (mod period).
  std::int64_t residue(std::int64_t x) const noexcept;
  bool contains(std::int64_t x) const noexcept { return pattern_[residue(x)]; }

  /// Members in [lo, hi], ascending.
  std::vector<std::int64_t> members_in(std::int64_t lo, std::int64_t hi) const;
  std::string pattern_string() const;

 private:
  std::int64_t anchor_;
  std::vector<bool> pattern_;
  Rational density_;
};

/// Runs the greedy rule: x >= 0 is chosen iff x - y is not in diff(S) for
/// every previously chosen y. Throws std::invalid_argument if horizon <= 0.
GreedyTrace run_greedy(const IntSet& s, std::int64_t horizon);

/// First recurrence F(a) == F(b) of the greedy window orbit (smallest b, and
/// the unique a for it), reduced to the minimal period.
Recurrence detect_period(const IntSet& s, const GreedyOptions& options = {});

/// The periodic extension of the greedy set from its first recurrence.
PeriodicSet periodic_packing(const IntSet& s, const GreedyOptions& options = {});

Rational greedy_density(const IntSet& s, const GreedyOptions& options = {});

/// Smallest q dividing pattern.size() such that the pattern is q-periodic.
std::size_t minimal_period(const std::vector<bool>& pattern);

}  // namespace packdens
