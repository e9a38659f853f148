#include "packdens/int_set.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <ostream>
#include <stdexcept>

namespace packdens {

IntSet::IntSet(std::vector<std::int64_t> elements) : elems_(std::move(elements)) {
  if (elems_.empty()) {
    throw std::invalid_argument("empty set");
  }
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  if (elems_.front() < -kMaxElementMagnitude || elems_.back() > kMaxElementMagnitude) {
    throw std::out_of_range("set element exceeds 2^32 in magnitude");
  }
}

IntSet::IntSet(std::initializer_list<std::int64_t> elements)
    : IntSet(std::vector<std::int64_t>(elements)) {}

bool IntSet::contains(std::int64_t x) const noexcept {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

IntSet IntSet::translated(std::int64_t offset) const {
  std::vector<std::int64_t> out(elems_);
  for (auto& x : out) x += offset;
  return IntSet(std::move(out));
}

IntSet IntSet::negated() const {
  std::vector<std::int64_t> out(elems_);
  for (auto& x : out) x = -x;
  return IntSet(std::move(out));
}

Normalized normalize(const IntSet& s) { return {s.translated(-s.min()), s.min()}; }

IntSet canonical_form(const IntSet& s) {
  IntSet forward = normalize(s).set;
  IntSet reflected = normalize(s.negated()).set;
  return reflected < forward ? reflected : forward;
}

bool is_normalized(const IntSet& s) noexcept { return s.min() == 0; }

ParsedSet parse_set_literal(std::string_view text) {
  std::vector<std::int64_t> values;
  std::size_t pos = 0;
  const auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  const auto fail = [&](const std::string& what) -> void {
    throw std::invalid_argument(what + " at position " + std::to_string(pos + 1));
  };

  skip_space();
  if (pos == text.size()) {
    throw std::invalid_argument("empty set");
  }
  while (true) {
    skip_space();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    std::string_view token = text.substr(start, pos - start);
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      pos = start;
      fail("expected integer");
    }
    if (value < -kMaxElementMagnitude || value > kMaxElementMagnitude) {
      pos = start;
      fail("integer out of range");
    }
    values.push_back(value);
    skip_space();
    if (pos == text.size()) break;
    if (text[pos] != ',') fail("expected ','");
    ++pos;
  }

  const std::size_t raw = values.size();
  IntSet set(std::move(values));
  return {set, set.size() != raw};
}

std::string to_literal(const IntSet& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s.elements()[i]);
  }
  return out;
}

std::string to_braced(std::span<const std::int64_t> values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out + "}";
}

std::string to_braced(const IntSet& s) { return to_braced(s.elements()); }

std::ostream& operator<<(std::ostream& os, const IntSet& s) { return os << to_braced(s); }

}  // namespace packdens
