#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace packdens {

/// Exact nonnegative rational, always kept in lowest terms.
///
/// Every density and bound in the library is a Rational. Comparisons use
/// 128-bit cross-multiplication so they never round.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::uint64_t numerator, std::uint64_t denominator);
  static Rational integer(std::uint64_t value) { return {value, 1}; }

  std::uint64_t numerator() const noexcept { return num_; }
  std::uint64_t denominator() const noexcept { return den_; }

  double to_double() const noexcept;

  /// "p/q", or "p" when q == 1.
  std::string to_string() const;
  static Rational parse(std::string_view text);

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) noexcept;

 private:
  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace packdens
