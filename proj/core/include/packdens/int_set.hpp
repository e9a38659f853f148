#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace packdens {

/// Largest element magnitude accepted anywhere in the library.
inline constexpr std::int64_t kMaxElementMagnitude = std::int64_t{1} << 32;

/// A finite nonempty set of integers, stored sorted and deduplicated.
class IntSet {
 public:
  /// Sorts and deduplicates. Throws std::invalid_argument("empty set") for
  /// empty input and std::out_of_range for elements beyond 2^32 in magnitude.
  explicit IntSet(std::vector<std::int64_t> elements);
  IntSet(std::initializer_list<std::int64_t> elements);

  std::span<const std::int64_t> elements() const noexcept { return elems_; }
  std::size_t size() const noexcept { return elems_.size(); }
  std::int64_t min() const noexcept { return elems_.front(); }
  std::int64_t max() const noexcept { return elems_.back(); }
  bool contains(std::int64_t x) const noexcept;

  auto begin() const noexcept { return elems_.begin(); }
  auto end() const noexcept { return elems_.end(); }

  IntSet translated(std::int64_t offset) const;
  IntSet negated() const;

  friend bool operator==(const IntSet&, const IntSet&) = default;
  friend auto operator<=>(const IntSet& lhs, const IntSet& rhs) { return lhs.elems_ <=> rhs.elems_; }

 private:
  std::vector<std::int64_t> elems_;
};

/// max(S) - min(S).
inline std::int64_t diameter(const IntSet& s) noexcept { return s.max() - s.min(); }

struct Normalized {
  IntSet set;
  std::int64_t offset;  // min of the original set
};

/// Translates so the minimum is 0.
Normalized normalize(const IntSet& s);

/// Representative under translation and reflection: the lexicographically
/// smaller of normalize(S) and normalize(-S).
IntSet canonical_form(const IntSet& s);

bool is_normalized(const IntSet& s) noexcept;

struct ParsedSet {
  IntSet set;
  bool had_duplicates = false;
};

/// Parses "0,1,4,6" (whitespace allowed around items). Errors are
/// std::invalid_argument with a 1-based character position in the message.
ParsedSet parse_set_literal(std::string_view text);

/// "0,1,4,6"
std::string to_literal(const IntSet& s);
/// "{0,1,4,6}"
std::string to_braced(const IntSet& s);
std::string to_braced(std::span<const std::int64_t> values);

std::ostream& operator<<(std::ostream& os, const IntSet& s);

}  // namespace packdens
