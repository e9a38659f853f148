#pragma once

#include <concepts>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "packdens/int_set.hpp"
#include "packdens/rational.hpp"

namespace packdens {

/// diff(S) = {s - t : s, t in S, s >= t}, sorted ascending.
class DiffSet {
 public:
  explicit DiffSet(const IntSet& source);

  std::span<const std::int64_t> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::size_t source_card() const noexcept { return source_card_; }
  std::int64_t diam() const noexcept { return values_.back(); }
  bool contains(std::int64_t d) const noexcept;

  friend bool operator==(const DiffSet&, const DiffSet&) = default;

 private:
  std::vector<std::int64_t> values_;
  std::size_t source_card_;
};

inline DiffSet diff_set(const IntSet& s) { return DiffSet(s); }

/// A is S-packing iff no difference of two distinct elements of A lies in diff(S).
bool is_packing(std::span<const std::int64_t> sorted_a, const DiffSet& d);
bool is_packing(const IntSet& a, const IntSet& s);

/// d(A, a, b) = |A ∩ [a, b-1]| / (b - a).
template <std::predicate<std::int64_t> Membership>
Rational interval_density(Membership&& in_set, std::int64_t a, std::int64_t b) {
  if (b <= a) {
    throw std::invalid_argument("empty interval");
  }
  std::uint64_t count = 0;
  for (std::int64_t x = a; x < b; ++x) {
    if (in_set(x)) ++count;
  }
  return Rational(count, static_cast<std::uint64_t>(b - a));
}

}  // namespace packdens
