#include "packdens/oracle.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <optional>
#include <stdexcept>

#include "packdens/bounds.hpp"
#include "packdens/greedy.hpp"

namespace packdens {

namespace {

constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min() / 4;
constexpr std::int64_t kNoCycle = std::numeric_limits<std::int64_t>::max();

// Cycle of the functional graph state -> next[state][1 if legal else 0] reached
// from state 0: the greedy packing, whose mean is a valid starting point.
Rational greedy_cycle_mean(const ShiftAutomaton& g) {
  std::vector<std::int64_t> seen(g.size(), -1);
  std::vector<int> bits;
  std::int32_t u = 0;
  while (seen[u] < 0) {
    seen[u] = static_cast<std::int64_t>(bits.size());
    const int bit = g.next[u][1] != ShiftAutomaton::kNoEdge ? 1 : 0;
    bits.push_back(bit);
    u = g.next[u][bit];
  }
  const auto ones = std::count(bits.begin() + seen[u], bits.end(), 1);
  return Rational(static_cast<std::uint64_t>(ones), bits.size() - static_cast<std::size_t>(seen[u]));
}

// Longest-path potentials from state 0 for integer weights q*bit - p, or the
// mean of a strictly heavier cycle if one exists. A cycle in the parent graph
// of Bellman-Ford always has positive weight, and one appears whenever a
// positive cycle is reachable.
struct Potentials {
  std::vector<std::int64_t> pi;
  std::optional<Rational> better;
};

Potentials longest_potentials(const ShiftAutomaton& g, const Rational& mean) {
  const std::size_t n = g.size();
  const auto p = static_cast<std::int64_t>(mean.numerator());
  const auto q = static_cast<std::int64_t>(mean.denominator());
  Potentials out{std::vector<std::int64_t>(n, kNegInf), std::nullopt};
  std::vector<std::int32_t> parent(n, ShiftAutomaton::kNoEdge);
  std::vector<std::int8_t> parent_bit(n, 0);
  std::vector<std::int32_t> mark(n, -1);
  out.pi[0] = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t u = 0; u < n; ++u) {
      if (out.pi[u] == kNegInf) continue;
      for (int bit = 0; bit < 2; ++bit) {
        const std::int32_t v = g.next[u][bit];
        if (v == ShiftAutomaton::kNoEdge) continue;
        const std::int64_t candidate = out.pi[u] + q * bit - p;
        if (candidate > out.pi[v]) {
          out.pi[v] = candidate;
          parent[v] = static_cast<std::int32_t>(u);
          parent_bit[v] = static_cast<std::int8_t>(bit);
          changed = true;
        }
      }
    }
    if (!changed) break;
    std::fill(mark.begin(), mark.end(), -1);
    for (std::size_t root = 0; root < n; ++root) {
      std::int32_t v = static_cast<std::int32_t>(root);
      while (v != ShiftAutomaton::kNoEdge && mark[v] < 0) {
        mark[v] = static_cast<std::int32_t>(root);
        v = parent[v];
      }
      if (v == ShiftAutomaton::kNoEdge || mark[v] != static_cast<std::int32_t>(root)) continue;
      std::uint64_t ones = 0, length = 0;
      const std::int32_t start = v;
      do {
        ones += static_cast<std::uint64_t>(parent_bit[v]);
        ++length;
        v = parent[v];
      } while (v != start);
      out.better = Rational(ones, length);
      return out;
    }
  }
  return out;
}

// Every optimal cycle consists of tight edges (pi[v] == pi[u] + weight) and
// every cycle of tight edges is optimal.
class TightGraph {
 public:
  TightGraph(const ShiftAutomaton& g, const Rational& mean, std::vector<std::int64_t> pi)
      : g_(g),
        p_(static_cast<std::int64_t>(mean.numerator())),
        q_(static_cast<std::int64_t>(mean.denominator())),
        pi_(std::move(pi)) {}

  // Target of the tight edge (u, bit), or kNoEdge.
  std::int32_t tight_next(std::size_t u, int bit) const {
    const std::int32_t v = g_.next[u][bit];
    if (v == ShiftAutomaton::kNoEdge || pi_[u] == kNegInf) return ShiftAutomaton::kNoEdge;
    return pi_[v] == pi_[u] + weight(bit) ? v : ShiftAutomaton::kNoEdge;
  }

 private:
  std::int64_t weight(int bit) const { return q_ * bit - p_; }

  const ShiftAutomaton& g_;
  std::int64_t p_;
  std::int64_t q_;
  std::vector<std::int64_t> pi_;
};

// Length of the shortest tight cycle through s, or kNoCycle. Exploration stops
// at `limit` edges.
std::int64_t shortest_cycle_through(const TightGraph& tight, std::int32_t s,
                                    std::int64_t limit, std::vector<std::int64_t>& dist) {
  std::vector<std::int32_t> touched{s};
  std::deque<std::int32_t> queue{s};
  dist[s] = 0;
  std::int64_t found = kNoCycle;
  while (!queue.empty() && found == kNoCycle) {
    const std::int32_t u = queue.front();
    queue.pop_front();
    for (int bit = 0; bit < 2; ++bit) {
      const std::int32_t v = tight.tight_next(u, bit);
      if (v == ShiftAutomaton::kNoEdge) continue;
      if (v == s) {
        found = dist[u] + 1;
        break;
      }
      if (dist[v] < 0 && dist[u] + 1 < limit) {
        dist[v] = dist[u] + 1;
        touched.push_back(v);
        queue.push_back(v);
      }
    }
  }
  for (auto v : touched) dist[v] = -1;
  return found;
}

// Lexicographically greatest closed tight walk of exactly `length` edges from s.
struct Walk {
  std::vector<bool> bits;
  std::vector<std::uint32_t> windows;
};

// `local` is scratch space of size g.size() filled with -1, and is restored.
Walk greatest_closed_walk(const ShiftAutomaton& g, const TightGraph& tight, std::int32_t s,
                          std::int64_t length, std::vector<std::int32_t>& local) {
  // Only states within `length` tight edges of s can lie on the walk.
  std::vector<std::int32_t> states{s};
  local[s] = 0;
  for (std::size_t head = 0, depth = 0, layer_end = 1;
       head < states.size() && static_cast<std::int64_t>(depth) < length; ++depth) {
    for (; head < layer_end; ++head) {
      for (int bit = 0; bit < 2; ++bit) {
        const std::int32_t v = tight.tight_next(static_cast<std::size_t>(states[head]), bit);
        if (v != ShiftAutomaton::kNoEdge && local[v] < 0) {
          local[v] = static_cast<std::int32_t>(states.size());
          states.push_back(v);
        }
      }
    }
    layer_end = states.size();
  }
  const std::size_t m = states.size();
  const auto next_local = [&](std::size_t i, int bit) {
    const std::int32_t v = tight.tight_next(static_cast<std::size_t>(states[i]), bit);
    return v == ShiftAutomaton::kNoEdge ? -1 : local[v];
  };

  // reach[k][i]: states[i] returns to s in exactly k tight edges.
  std::vector<std::vector<bool>> reach(length, std::vector<bool>(m, false));
  reach[0][0] = true;
  for (std::int64_t k = 1; k < length; ++k) {
    for (std::size_t i = 0; i < m; ++i) {
      for (int bit = 0; bit < 2 && !reach[k][i]; ++bit) {
        const std::int32_t j = next_local(i, bit);
        if (j >= 0 && reach[k - 1][j]) reach[k][i] = true;
      }
    }
  }
  Walk walk;
  std::size_t cur = 0;
  for (std::int64_t i = 0; i < length; ++i) {
    walk.windows.push_back(g.windows[states[cur]]);
    const std::int64_t remaining = length - 1 - i;
    bool moved = false;
    for (int bit = 1; bit >= 0 && !moved; --bit) {
      const std::int32_t j = next_local(cur, bit);
      if (j >= 0 && reach[remaining][j]) {
        walk.bits.push_back(bit == 1);
        cur = static_cast<std::size_t>(j);
        moved = true;
      }
    }
    if (!moved) break;
  }
  for (auto v : states) local[v] = -1;
  if (walk.bits.size() != static_cast<std::size_t>(length)) {
    throw std::logic_error("max_mean_cycle: witness walk got stuck");
  }
  return walk;
}

}  // namespace

std::string DensityResult::pattern_string() const {
  std::string out;
  for (bool bit : witness_pattern) out += bit ? '1' : '0';
  return out;
}

ShiftAutomaton build_automaton(const IntSet& s, const OracleOptions& options) {
  const DiffSet d(s);
  const std::int64_t width = d.diam();
  if (width < 1) {
    throw std::invalid_argument("automaton requires diam(S) >= 1");
  }
  if (width > options.width_cap || width > 31) {
    throw std::invalid_argument("diam(S) = " + std::to_string(width) +
                                " exceeds automaton width cap " +
                                std::to_string(options.width_cap));
  }
  std::uint32_t forbidden = 0;
  for (auto gap : d.values()) {
    if (gap > 0) forbidden |= std::uint32_t{1} << (gap - 1);
  }
  const std::uint32_t mask = (std::uint32_t{1} << width) - 1;

  ShiftAutomaton g;
  g.width = static_cast<int>(width);
  std::vector<std::int32_t> index(std::size_t{1} << width, ShiftAutomaton::kNoEdge);
  const auto intern = [&](std::uint32_t window) {
    if (index[window] == ShiftAutomaton::kNoEdge) {
      index[window] = static_cast<std::int32_t>(g.windows.size());
      g.windows.push_back(window);
      g.next.push_back({ShiftAutomaton::kNoEdge, ShiftAutomaton::kNoEdge});
    }
    return index[window];
  };
  intern(0);
  for (std::size_t u = 0; u < g.windows.size(); ++u) {
    const std::uint32_t window = g.windows[u];
    const std::int32_t zero = intern((window << 1) & mask);
    g.next[u][0] = zero;
    if ((window & forbidden) == 0) {
      const std::int32_t one = intern(((window << 1) | 1U) & mask);
      g.next[u][1] = one;
    }
  }
  return g;
}

DensityResult max_mean_cycle(const ShiftAutomaton& g) {
  const std::size_t n = g.size();
  if (n == 0 || g.next.size() != n) {
    throw std::invalid_argument("max_mean_cycle: malformed automaton");
  }
  for (const auto& edges : g.next) {
    if (edges[0] == ShiftAutomaton::kNoEdge && edges[1] == ShiftAutomaton::kNoEdge) {
      throw std::invalid_argument("max_mean_cycle: state without outgoing edge");
    }
  }

  Rational mean = greedy_cycle_mean(g);
  Potentials potentials = longest_potentials(g, mean);
  while (potentials.better) {
    if (!(mean < *potentials.better)) {
      throw std::logic_error("max_mean_cycle: cycle improvement did not increase the mean");
    }
    mean = *potentials.better;
    potentials = longest_potentials(g, mean);
  }
  const TightGraph tight(g, mean, std::move(potentials.pi));

  std::vector<std::int64_t> dist(n, -1);
  std::vector<std::int64_t> girth(n, kNoCycle);
  std::int64_t shortest = kNoCycle;
  for (std::size_t s = 0; s < n; ++s) {
    girth[s] = shortest_cycle_through(tight, static_cast<std::int32_t>(s), shortest, dist);
    shortest = std::min(shortest, girth[s]);
  }
  if (shortest == kNoCycle) {
    throw std::logic_error("max_mean_cycle: no tight cycle found");
  }

  // A pattern's greatest rotation ends in 0 unless it is all ones, so only
  // states whose latest bit is 0 can start the chosen rotation.
  const bool all_ones = mean == Rational(1, 1);
  std::optional<Walk> best;
  std::vector<std::int32_t> local(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    if (girth[s] != shortest) continue;
    if (!all_ones && (g.windows[s] & 1U)) continue;
    Walk walk = greatest_closed_walk(g, tight, static_cast<std::int32_t>(s), shortest, local);
    if (!best || best->bits < walk.bits) best = std::move(walk);
  }
  if (!best) {
    throw std::logic_error("max_mean_cycle: no witness start state");
  }

  DensityResult result;
  const auto ones = static_cast<std::uint64_t>(std::count(best->bits.begin(), best->bits.end(), true));
  result.density = Rational(ones, static_cast<std::uint64_t>(shortest));
  if (result.density != mean) {
    throw std::logic_error("max_mean_cycle: witness mean " + result.density.to_string() +
                           " differs from " + mean.to_string());
  }
  result.witness_cycle = std::move(best->windows);
  result.witness_pattern = std::move(best->bits);
  result.witness_period = shortest;
  result.states = n;
  return result;
}

bool periodic_pattern_is_packing(const std::vector<bool>& pattern, const DiffSet& d) {
  const auto p = static_cast<std::int64_t>(pattern.size());
  if (p == 0) {
    throw std::invalid_argument("periodic pattern must be nonempty");
  }
  // Any offending pair can be shifted so its left end lies in [0, p); its
  // right end is then below p + diam.
  const std::int64_t copies = std::max<std::int64_t>(3, (p + d.diam() + p - 1) / p + 1);
  std::vector<std::int64_t> tiled;
  for (std::int64_t c = 0; c < copies; ++c) {
    for (std::int64_t i = 0; i < p; ++i) {
      if (pattern[i]) tiled.push_back(c * p + i);
    }
  }
  return is_packing(tiled, d);
}

DensityResult exact_packing_density(const IntSet& s, const OracleOptions& options) {
  const IntSet norm = normalize(s).set;
  if (diameter(norm) == 0) {
    return DensityResult{Rational(1, 1), {0}, 1, {true}, 1};
  }
  DensityResult result = max_mean_cycle(build_automaton(norm, options));

  const BoundsReport bounds = bounds_report(norm);
  if (result.density < bounds.lower || result.density > bounds.upper) {
    throw std::logic_error("oracle consistency check failed for " + to_braced(norm) + ": " +
                           result.density.to_string() + " outside [" + bounds.lower.to_string() +
                           ", " + bounds.upper.to_string() + "]");
  }
  if (!periodic_pattern_is_packing(result.witness_pattern, DiffSet(norm))) {
    throw std::logic_error("oracle consistency check failed for " + to_braced(norm) +
                           ": witness " + result.pattern_string() + " is not a packing");
  }
  if (result.density < greedy_density(norm)) {
    throw std::logic_error("oracle consistency check failed for " + to_braced(norm) +
                           ": below the greedy density");
  }
  return result;
}

Rational brute_force_periodic(const IntSet& s, int max_period) {
  if (max_period < 1 || max_period > 20) {
    throw std::invalid_argument("max_period must lie in [1, 20]");
  }
  const DiffSet d(s);
  Rational best(0, 1);
  std::vector<bool> pattern;
  for (int p = 1; p <= max_period; ++p) {
    // Rotating a periodic set does not change its density, so position 0 may
    // be assumed occupied.
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << p); mask += 2) {
      const Rational density(static_cast<std::uint64_t>(std::popcount(mask)), static_cast<std::uint64_t>(p));
      if (density <= best) continue;
      pattern.assign(p, false);
      for (int i = 0; i < p; ++i) pattern[i] = (mask >> i) & 1U;
      if (periodic_pattern_is_packing(pattern, d)) best = density;
    }
  }
  return best;
}

}  // namespace packdens
