#include "packdens/greedy.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

namespace packdens {

namespace {

constexpr std::uint64_t kHashModulus = (std::uint64_t{1} << 61) - 1;
constexpr std::uint64_t kHashBase = 0x9E3779B97F4A7C15ULL % kHashModulus;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 product = static_cast<unsigned __int128>(a) * b;
  std::uint64_t folded = static_cast<std::uint64_t>(product & kHashModulus) +
                         static_cast<std::uint64_t>(product >> 61);
  if (folded >= kHashModulus) folded -= kHashModulus;
  return folded;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base);
    base = mul_mod(base, base);
    exp >>= 1;
  }
  return result;
}

// Generates greedy membership bit by bit. Membership of x only depends on
// positions x - d for positive d in diff(S), all inside [x - diam, x - 1].
class GreedyEngine {
 public:
  explicit GreedyEngine(const IntSet& s) : source_(normalize(s).set) {
    DiffSet d(source_);
    for (auto gap : d.values()) {
      if (gap > 0) gaps_.push_back(gap);
    }
    width_ = d.diam();
  }

  const IntSet& source() const noexcept { return source_; }
  std::int64_t width() const noexcept { return width_; }
  const std::vector<bool>& membership() const noexcept { return member_; }

  void extend_to(std::int64_t n) {
    while (static_cast<std::int64_t>(member_.size()) < n) {
      const auto x = static_cast<std::int64_t>(member_.size());
      bool pick = true;
      for (auto gap : gaps_) {
        if (gap > x) break;
        if (member_[x - gap]) {
          pick = false;
          break;
        }
      }
      member_.push_back(pick);
    }
  }

  bool same_window(std::int64_t a, std::int64_t b) const {
    for (std::int64_t j = 0; j < width_; ++j) {
      if (member_[a + j] != member_[b + j]) return false;
    }
    return true;
  }

  // Scans windows F(t) for t = 0, 1, ... and returns the first repeat. Stops
  // (returning nullopt) once t + width would pass `position_limit`, or throws
  // when more than `budget` windows have been examined.
  std::optional<Recurrence> first_recurrence(std::int64_t position_limit, std::uint64_t budget) {
    const std::uint64_t top_weight = width_ > 0 ? pow_mod(kHashBase, width_ - 1) : 0;
    std::unordered_multimap<std::uint64_t, std::int64_t> seen;
    std::uint64_t hash = 0;
    for (std::int64_t t = 0;; ++t) {
      if (t + width_ > position_limit) return std::nullopt;
      if (static_cast<std::uint64_t>(t) >= budget) {
        throw BudgetExhausted("state budget exhausted after " + std::to_string(t) + " positions",
                              static_cast<std::uint64_t>(t));
      }
      extend_to(t + width_);
      if (t == 0) {
        for (std::int64_t j = 0; j < width_; ++j) {
          hash = (mul_mod(hash, kHashBase) + (member_[j] ? 1 : 0)) % kHashModulus;
        }
      } else if (width_ > 0) {
        std::uint64_t drop = member_[t - 1] ? top_weight : 0;
        hash = (hash + kHashModulus - drop) % kHashModulus;
        hash = (mul_mod(hash, kHashBase) + (member_[t + width_ - 1] ? 1 : 0)) % kHashModulus;
      }
      auto [lo, hi] = seen.equal_range(hash);
      for (auto it = lo; it != hi; ++it) {
        if (same_window(it->second, t)) {
          return Recurrence{it->second, t - it->second};
        }
      }
      seen.emplace(hash, t);
    }
  }

 private:
  IntSet source_;
  std::vector<std::int64_t> gaps_;
  std::int64_t width_ = 0;
  std::vector<bool> member_;
};

std::vector<bool> slice(const std::vector<bool>& bits, std::int64_t from, std::int64_t count) {
  return {bits.begin() + from, bits.begin() + from + count};
}

}  // namespace

WindowState window_at(const GreedyTrace& trace, std::int64_t t) {
  const std::int64_t width = diameter(trace.source);
  if (t < 0 || t + width > trace.horizon()) {
    throw std::out_of_range("window extends past the trace horizon");
  }
  return {slice(trace.membership, t, width)};
}

PeriodicSet::PeriodicSet(std::int64_t anchor, std::vector<bool> pattern)
    : anchor_(anchor), pattern_(std::move(pattern)) {
  if (pattern_.empty()) {
    throw std::invalid_argument("periodic pattern must be nonempty");
  }
  const auto ones = static_cast<std::uint64_t>(std::count(pattern_.begin(), pattern_.end(), true));
  density_ = Rational(ones, pattern_.size());
}

std::int64_t PeriodicSet::residue(std::int64_t x) const noexcept {
  const std::int64_t p = period();
  const std::int64_t r = (x - anchor_) % p;
  return r < 0 ? r + p : r;
}

std::vector<std::int64_t> PeriodicSet::members_in(std::int64_t lo, std::int64_t hi) const {
  std::vector<std::int64_t> out;
  for (std::int64_t x = lo; x <= hi; ++x) {
    if (contains(x)) out.push_back(x);
  }
  return out;
}

std::string PeriodicSet::pattern_string() const {
  std::string out;
  out.reserve(pattern_.size());
  for (bool bit : pattern_) out += bit ? '1' : '0';
  return out;
}

std::size_t minimal_period(const std::vector<bool>& pattern) {
  const std::size_t n = pattern.size();
  for (std::size_t q = 1; q < n; ++q) {
    if (n % q != 0) continue;
    bool periodic = true;
    for (std::size_t i = 0; i + q < n && periodic; ++i) {
      periodic = pattern[i] == pattern[i + q];
    }
    if (periodic) return q;
  }
  return n;
}

GreedyTrace run_greedy(const IntSet& s, std::int64_t horizon) {
  if (horizon <= 0) {
    throw std::invalid_argument("horizon must be positive");
  }
  GreedyEngine engine(s);
  engine.extend_to(horizon);
  GreedyTrace trace{engine.source(), {}, engine.membership(), std::nullopt};
  for (std::int64_t x = 0; x < horizon; ++x) {
    if (trace.membership[x]) trace.chosen.push_back(x);
  }
  // Bounded by the horizon rather than by a budget.
  trace.recurrence = engine.first_recurrence(horizon, std::numeric_limits<std::uint64_t>::max());
  return trace;
}

Recurrence detect_period(const IntSet& s, const GreedyOptions& options) {
  GreedyEngine engine(s);
  if (engine.width() == 0) {
    return {0, 1};
  }
  auto found = engine.first_recurrence(std::numeric_limits<std::int64_t>::max(), options.state_budget);
  const auto pattern = slice(engine.membership(), found->anchor, found->period);
  found->period = static_cast<std::int64_t>(minimal_period(pattern));
  return *found;
}

PeriodicSet periodic_packing(const IntSet& s, const GreedyOptions& options) {
  if (diameter(s) == 0) {
    return PeriodicSet(0, {true});
  }
  const Recurrence rec = detect_period(s, options);
  const GreedyTrace trace = run_greedy(s, rec.anchor + rec.period);
  return PeriodicSet(rec.anchor, slice(trace.membership, rec.anchor, rec.period));
}

Rational greedy_density(const IntSet& s, const GreedyOptions& options) {
  return periodic_packing(s, options).density();
}

}  // namespace packdens
