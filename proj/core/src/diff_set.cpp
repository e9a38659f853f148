#include "packdens/diff_set.hpp"

#include <algorithm>

namespace packdens {

DiffSet::DiffSet(const IntSet& source) : source_card_(source.size()) {
  const auto elems = source.elements();
  values_.reserve(elems.size() * (elems.size() - 1) / 2 + 1);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      values_.push_back(elems[i] - elems[j]);
    }
  }
  std::sort(values_.begin(), values_.end());
  values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
}

bool DiffSet::contains(std::int64_t d) const noexcept {
  return std::binary_search(values_.begin(), values_.end(), d);
}

bool is_packing(std::span<const std::int64_t> sorted_a, const DiffSet& d) {
  const std::int64_t diam = d.diam();
  for (std::size_t i = 0; i < sorted_a.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted_a.size(); ++j) {
      const std::int64_t gap = sorted_a[j] - sorted_a[i];
      if (gap > diam) break;
      if (d.contains(gap)) return false;
    }
  }
  return true;
}

bool is_packing(const IntSet& a, const IntSet& s) { return is_packing(a.elements(), DiffSet(s)); }

}  // namespace packdens
