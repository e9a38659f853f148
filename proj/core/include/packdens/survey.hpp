#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "packdens/greedy.hpp"
#include "packdens/int_set.hpp"
#include "packdens/oracle.hpp"
#include "packdens/rational.hpp"

namespace packdens {

/// Per-set evidence. Invariant: lower <= greedy <= exact <= upper.
struct SurveyRow {
  IntSet set{0};
  std::size_t diff_size = 1;
  Rational lower;
  Rational upper;
  Rational greedy;
  std::optional<Rational> exact;  // absent in greedy-only sweeps
  std::int64_t period = 1;        // oracle witness period, or greedy period without the oracle

  /// The value the survey minimizes: exact when present, else greedy.
  const Rational& value() const noexcept { return exact ? *exact : greedy; }
  friend bool operator==(const SurveyRow&, const SurveyRow&) = default;
};

struct SurveyOptions {
  int k = 4;
  std::int64_t max_elem = 16;
  bool use_oracle = true;
  unsigned jobs = 1;
  std::optional<std::filesystem::path> checkpoint;
  OracleOptions oracle;
  GreedyOptions greedy;
};

struct SurveyReport {
  int k = 0;
  std::int64_t max_elem = 0;
  bool use_oracle = true;
  std::vector<SurveyRow> rows;  // sorted by set
  Rational minimum;
  std::vector<IntSet> minimizers;
};

/// Sets {0 < a_1 < ... < a_{k-1} <= max_elem} that equal their own canonical
/// form, in lexicographic order.
std::vector<IntSet> enumerate_normalized_sets(int k, std::int64_t max_elem);

SurveyRow evaluate_row(const IntSet& set, bool use_oracle, const OracleOptions& oracle = {},
                       const GreedyOptions& greedy = {});

/// Evaluates every canonical set. With a checkpoint path, rows already logged
/// there are reused and new rows are appended one JSON object per line.
SurveyReport run_survey(const SurveyOptions& options);

struct TheoremVerdict {
  bool pass = false;
  std::int64_t max_elem = 0;
  std::size_t sets_checked = 0;
  std::size_t max_diff_size = 0;
  Rational minimum;
  std::vector<IntSet> minimizers;
  Rational reference_density;   // exact density of {0,1,4,6}
  std::vector<IntSet> failures;  // sets with density below 1/7 or |diff| > 7

  std::string summary() const;
};

/// Sweeps all canonical 4-sets with max element <= max_elem through the oracle.
/// Throws std::invalid_argument when max_elem < 6.
TheoremVerdict verify_main_theorem(std::int64_t max_elem, unsigned jobs = 1,
                                   std::optional<std::filesystem::path> checkpoint = std::nullopt);

// Serialization. Field order is fixed so output is byte-stable.
nlohmann::ordered_json row_to_json(const SurveyRow& row, bool with_float = false);
SurveyRow row_from_json(const nlohmann::json& j);
nlohmann::ordered_json report_to_json(const SurveyReport& report, bool with_float = false);
std::string report_to_csv(const SurveyReport& report, bool with_float = false);
nlohmann::ordered_json verdict_to_json(const TheoremVerdict& verdict);

/// Decimal approximation used by the --float outputs.
std::string format_decimal(const Rational& r);

}  // namespace packdens
