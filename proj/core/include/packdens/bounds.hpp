#pragma once

#include <cstdint>
#include <string_view>

#include "packdens/diff_set.hpp"
#include "packdens/int_set.hpp"
#include "packdens/rational.hpp"

namespace packdens {

enum class UpperBoundKind {
  kBasis,         // 1/(n+1) from {0..n} ⊆ diff(S)
  kDisjointness,  // 1/|S| from disjoint translates
};

std::string_view to_string(UpperBoundKind kind) noexcept;

struct BoundsReport {
  Rational lower;
  Rational upper;
  std::int64_t initial_run_n = 0;
  UpperBoundKind active_upper = UpperBoundKind::kBasis;
};

/// Largest n with {0, 1, ..., n} ⊆ D.
std::int64_t longest_initial_run(const DiffSet& d);

/// min(1/(n+1), 1/|S|) with n = longest_initial_run(diff(S)).
Rational upper_bound(const IntSet& s);

/// 1/|diff(S)|.
Rational lower_bound(const IntSet& s);

/// Both bounds together. The basis bound wins ties.
BoundsReport bounds_report(const IntSet& s);

/// (k²/4 + 11k/6 - 14)^-1 = 12/(3k² + 22k - 168). Informational only;
/// throws std::invalid_argument for k < 5.
Rational weinstein_bound(std::int64_t k);

}  // namespace packdens
