#include "packdens/rational.hpp"

#include <charconv>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace packdens {

namespace {

std::uint64_t parse_u64(std::string_view text) {
  std::uint64_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    throw std::invalid_argument("invalid rational \"" + std::string(text) + "\"");
  }
  return value;
}

}  // namespace

Rational::Rational(std::uint64_t numerator, std::uint64_t denominator) {
  if (denominator == 0) {
    throw std::invalid_argument("rational with zero denominator");
  }
  const std::uint64_t g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

double Rational::to_double() const noexcept {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
  if (den_ == 1) {
    return std::to_string(num_);
  }
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_u64(text), 1);
  }
  return Rational(parse_u64(text.substr(0, slash)), parse_u64(text.substr(slash + 1)));
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) noexcept {
  using u128 = unsigned __int128;
  const u128 left = static_cast<u128>(lhs.num_) * rhs.den_;
  const u128 right = static_cast<u128>(rhs.num_) * lhs.den_;
  if (left < right) return std::strong_ordering::less;
  if (left > right) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace packdens
