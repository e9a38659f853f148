#include "packdens/survey.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "packdens/bounds.hpp"
#include "packdens/diff_set.hpp"

namespace packdens {

namespace {

const IntSet& reference_set() {
  static const IntSet set{0, 1, 4, 6};
  return set;
}

std::map<IntSet, SurveyRow> load_checkpoint(const std::filesystem::path& path) {
  std::map<IntSet, SurveyRow> rows;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    // A sweep killed mid-write can leave a torn final line; it is recomputed.
    auto parsed = nlohmann::json::parse(line, nullptr, false);
    if (parsed.is_discarded()) continue;
    try {
      SurveyRow row = row_from_json(parsed);
      rows.insert_or_assign(row.set, std::move(row));
    } catch (const std::exception&) {
      continue;
    }
  }
  return rows;
}

}  // namespace

std::vector<IntSet> enumerate_normalized_sets(int k, std::int64_t max_elem) {
  if (k < 2 || max_elem < k - 1) {
    throw std::invalid_argument("infeasible enumeration parameters: k = " + std::to_string(k) +
                                ", max_elem = " + std::to_string(max_elem));
  }
  std::vector<IntSet> out;
  // Lexicographic walk over the k-1 nonzero elements.
  std::vector<std::int64_t> tail(k - 1);
  for (int i = 0; i < k - 1; ++i) tail[i] = i + 1;
  while (true) {
    std::vector<std::int64_t> elems{0};
    elems.insert(elems.end(), tail.begin(), tail.end());
    IntSet set(std::move(elems));
    if (canonical_form(set) == set) out.push_back(std::move(set));

    int i = k - 2;
    while (i >= 0 && tail[i] == max_elem - (k - 2 - i)) --i;
    if (i < 0) break;
    ++tail[i];
    for (int j = i + 1; j < k - 1; ++j) tail[j] = tail[j - 1] + 1;
  }
  return out;
}

SurveyRow evaluate_row(const IntSet& set, bool use_oracle, const OracleOptions& oracle,
                       const GreedyOptions& greedy) {
  SurveyRow row;
  row.set = set;
  row.diff_size = DiffSet(set).size();
  const BoundsReport bounds = bounds_report(set);
  row.lower = bounds.lower;
  row.upper = bounds.upper;
  const PeriodicSet greedy_set = periodic_packing(set, greedy);
  row.greedy = greedy_set.density();
  row.period = greedy_set.period();
  if (use_oracle) {
    const DensityResult exact = exact_packing_density(set, oracle);
    row.exact = exact.density;
    row.period = exact.witness_period;
  }
  const bool ordered = row.lower <= row.greedy && row.greedy <= row.value() && row.value() <= row.upper;
  if (!ordered) {
    throw std::logic_error("row invariant lower <= greedy <= exact <= upper violated");
  }
  return row;
}

SurveyReport run_survey(const SurveyOptions& options) {
  const std::vector<IntSet> sets = enumerate_normalized_sets(options.k, options.max_elem);

  std::map<IntSet, SurveyRow> logged;
  if (options.checkpoint) logged = load_checkpoint(*options.checkpoint);

  std::vector<std::optional<SurveyRow>> slots(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    auto it = logged.find(sets[i]);
    if (it != logged.end() && (!options.use_oracle || it->second.exact)) {
      SurveyRow row = it->second;
      if (!options.use_oracle && row.exact) {
        row = evaluate_row(sets[i], false, options.oracle, options.greedy);
      }
      slots[i] = std::move(row);
    }
  }

  std::ofstream log;
  if (options.checkpoint) {
    log.open(*options.checkpoint, std::ios::app);
    if (!log) {
      throw std::runtime_error("cannot open checkpoint " + options.checkpoint->string());
    }
  }
  std::mutex log_mutex;
  std::mutex error_mutex;
  std::optional<std::pair<std::size_t, std::string>> first_error;
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= sets.size()) return;
      if (slots[i]) continue;
      try {
        SurveyRow row = evaluate_row(sets[i], options.use_oracle, options.oracle, options.greedy);
        if (log.is_open()) {
          std::lock_guard lock(log_mutex);
          log << row_to_json(row).dump() << '\n' << std::flush;
        }
        slots[i] = std::move(row);
      } catch (const std::exception& e) {
        std::lock_guard lock(error_mutex);
        if (!first_error || i < first_error->first) {
          first_error.emplace(i, "survey row " + to_braced(sets[i]) + ": " + e.what());
        }
      }
    }
  };

  const unsigned jobs = std::max(1U, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  if (first_error) {
    throw std::runtime_error(first_error->second);
  }

  SurveyReport report;
  report.k = options.k;
  report.max_elem = options.max_elem;
  report.use_oracle = options.use_oracle;
  for (auto& slot : slots) report.rows.push_back(std::move(*slot));
  report.minimum = report.rows.front().value();
  for (const auto& row : report.rows) report.minimum = std::min(report.minimum, row.value());
  for (const auto& row : report.rows) {
    if (row.value() == report.minimum) report.minimizers.push_back(row.set);
  }
  return report;
}

std::string TheoremVerdict::summary() const {
  std::string out = pass ? "PASS" : "FAIL";
  out += ": min = " + minimum.to_string() + " at ";
  for (std::size_t i = 0; i < minimizers.size(); ++i) {
    if (i) out += ", ";
    out += to_braced(minimizers[i]);
  }
  return out;
}

TheoremVerdict verify_main_theorem(std::int64_t max_elem, unsigned jobs,
                                   std::optional<std::filesystem::path> checkpoint) {
  if (max_elem < 6) {
    throw std::invalid_argument("cap below 6: {0,1,4,6} not in range");
  }
  SurveyOptions options;
  options.k = 4;
  options.max_elem = max_elem;
  options.use_oracle = true;
  options.jobs = jobs;
  options.checkpoint = std::move(checkpoint);
  const SurveyReport report = run_survey(options);

  const Rational seventh(1, 7);
  TheoremVerdict verdict;
  verdict.max_elem = max_elem;
  verdict.sets_checked = report.rows.size();
  verdict.minimum = report.minimum;
  verdict.minimizers = report.minimizers;
  verdict.reference_density = exact_packing_density(reference_set()).density;
  for (const auto& row : report.rows) {
    verdict.max_diff_size = std::max(verdict.max_diff_size, row.diff_size);
    if (row.value() < seventh || row.diff_size > 7) verdict.failures.push_back(row.set);
  }
  verdict.pass = verdict.failures.empty() && verdict.reference_density == seventh;
  return verdict;
}

}  // namespace packdens
