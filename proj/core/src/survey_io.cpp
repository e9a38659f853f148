#include <cstdio>
#include <sstream>

#include "packdens/survey.hpp"

namespace packdens {

namespace {

void put_rational(nlohmann::ordered_json& j, const char* key, const Rational& r, bool with_float) {
  j[key] = r.to_string();
  if (with_float) j[std::string(key) + "_float"] = r.to_double();
}

std::vector<std::int64_t> to_vector(const IntSet& s) { return {s.begin(), s.end()}; }

}  // namespace

std::string format_decimal(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", r.to_double());
  return buf;
}

nlohmann::ordered_json row_to_json(const SurveyRow& row, bool with_float) {
  nlohmann::ordered_json j;
  j["set"] = to_vector(row.set);
  j["diff_size"] = row.diff_size;
  put_rational(j, "lower", row.lower, with_float);
  put_rational(j, "upper", row.upper, with_float);
  put_rational(j, "greedy", row.greedy, with_float);
  if (row.exact) {
    put_rational(j, "exact", *row.exact, with_float);
  } else {
    j["exact"] = nullptr;
  }
  j["period"] = row.period;
  return j;
}

SurveyRow row_from_json(const nlohmann::json& j) {
  SurveyRow row;
  row.set = IntSet(j.at("set").get<std::vector<std::int64_t>>());
  row.diff_size = j.at("diff_size").get<std::size_t>();
  row.lower = Rational::parse(j.at("lower").get<std::string>());
  row.upper = Rational::parse(j.at("upper").get<std::string>());
  row.greedy = Rational::parse(j.at("greedy").get<std::string>());
  if (!j.at("exact").is_null()) row.exact = Rational::parse(j.at("exact").get<std::string>());
  row.period = j.at("period").get<std::int64_t>();
  return row;
}

nlohmann::ordered_json report_to_json(const SurveyReport& report, bool with_float) {
  nlohmann::ordered_json j;
  j["k"] = report.k;
  j["max_elem"] = report.max_elem;
  j["use_oracle"] = report.use_oracle;
  j["representatives"] = "min 0, canonical under translation and reflection";
  put_rational(j, "minimum", report.minimum, with_float);
  j["minimizers"] = nlohmann::ordered_json::array();
  for (const auto& s : report.minimizers) j["minimizers"].push_back(to_vector(s));
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) j["rows"].push_back(row_to_json(row, with_float));
  return j;
}

std::string report_to_csv(const SurveyReport& report, bool with_float) {
  std::ostringstream out;
  out << "set,diff_size,lower,upper,greedy,exact,period";
  if (with_float) out << ",lower_float,upper_float,greedy_float,exact_float";
  out << '\n';
  for (const auto& row : report.rows) {
    out << '"' << to_literal(row.set) << "\"," << row.diff_size << ',' << row.lower << ','
        << row.upper << ',' << row.greedy << ',' << (row.exact ? row.exact->to_string() : "")
        << ',' << row.period;
    if (with_float) {
      out << ',' << format_decimal(row.lower) << ',' << format_decimal(row.upper) << ','
          << format_decimal(row.greedy) << ',' << (row.exact ? format_decimal(*row.exact) : "");
    }
    out << '\n';
  }
  return out.str();
}

nlohmann::ordered_json verdict_to_json(const TheoremVerdict& verdict) {
  nlohmann::ordered_json j;
  j["verdict"] = verdict.pass ? "PASS" : "FAIL";
  j["max_elem"] = verdict.max_elem;
  j["sets_checked"] = verdict.sets_checked;
  j["max_diff_size"] = verdict.max_diff_size;
  j["minimum"] = verdict.minimum.to_string();
  j["minimizers"] = nlohmann::ordered_json::array();
  for (const auto& s : verdict.minimizers) j["minimizers"].push_back(to_vector(s));
  j["reference_density"] = verdict.reference_density.to_string();
  j["failures"] = nlohmann::ordered_json::array();
  for (const auto& s : verdict.failures) j["failures"].push_back(to_vector(s));
  return j;
}

}  // namespace packdens
