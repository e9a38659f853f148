#include "packdens/bounds.hpp"

#include <stdexcept>

namespace packdens {

std::string_view to_string(UpperBoundKind kind) noexcept {
  switch (kind) {
    case UpperBoundKind::kBasis:
      return "basis";
    case UpperBoundKind::kDisjointness:
      return "disjointness";
  }
  return "unknown";
}

std::int64_t longest_initial_run(const DiffSet& d) {
  std::int64_t n = 0;
  const auto values = d.values();
  // values is sorted and starts at 0, so the run is the longest prefix with values[i] == i.
  while (static_cast<std::size_t>(n + 1) < values.size() && values[n + 1] == n + 1) ++n;
  return n;
}

BoundsReport bounds_report(const IntSet& s) {
  const DiffSet d(s);
  BoundsReport report;
  report.lower = Rational(1, d.size());
  report.initial_run_n = longest_initial_run(d);
  const Rational basis(1, static_cast<std::uint64_t>(report.initial_run_n) + 1);
  const Rational disjoint(1, s.size());
  if (disjoint < basis) {
    report.upper = disjoint;
    report.active_upper = UpperBoundKind::kDisjointness;
  } else {
    report.upper = basis;
    report.active_upper = UpperBoundKind::kBasis;
  }
  return report;
}

Rational upper_bound(const IntSet& s) { return bounds_report(s).upper; }

Rational lower_bound(const IntSet& s) { return Rational(1, DiffSet(s).size()); }

Rational weinstein_bound(std::int64_t k) {
  if (k < 5) {
    throw std::invalid_argument("bound applies for k >= 5 only");
  }
  if (k > (std::int64_t{1} << 30)) {
    throw std::out_of_range("k too large");
  }
  const auto kk = static_cast<std::uint64_t>(k);
  return Rational(12, 3 * kk * kk + 22 * kk - 168);
}

}  // namespace packdens
