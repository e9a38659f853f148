#include "packdens/commands.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "packdens/bounds.hpp"
#include "packdens/diff_set.hpp"
#include "packdens/greedy.hpp"
#include "packdens/int_set.hpp"
#include "packdens/oracle.hpp"
#include "packdens/survey.hpp"

namespace packdens::cli {

namespace {

enum class Format { kPlain, kJson, kCsv };

struct Common {
  Format format = Format::kPlain;
  bool with_float = false;
};

using Json = nlohmann::ordered_json;

std::vector<std::int64_t> to_vector(const IntSet& s) { return {s.begin(), s.end()}; }

std::string join(std::span<const std::int64_t> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

std::string quoted(const std::string& s) { return '"' + s + '"'; }

// Exact text, plus a decimal approximation when --float is on.
std::string show(const Rational& r, const Common& common) {
  if (!common.with_float) return r.to_string();
  return r.to_string() + " (~" + format_decimal(r) + ")";
}

void put(Json& j, const std::string& key, const Rational& r, const Common& common) {
  j[key] = r.to_string();
  if (common.with_float) j[key + "_float"] = r.to_double();
}

IntSet read_set(const std::string& literal, std::ostream& err) {
  ParsedSet parsed = parse_set_literal(literal);
  if (parsed.had_duplicates) {
    err << "warning: duplicate elements removed: " << to_braced(parsed.set) << '\n';
  }
  return parsed.set;
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

int cmd_diff(const std::string& literal, const Common& common, std::ostream& out, std::ostream& err) {
  const IntSet s = read_set(literal, err);
  const DiffSet d(s);
  switch (common.format) {
    case Format::kPlain:
      out << "diff = " << to_braced(d.values()) << " |diff| = " << d.size() << " diam = " << d.diam()
          << '\n';
      break;
    case Format::kJson: {
      Json j;
      j["S"] = to_vector(s);
      j["diff"] = std::vector<std::int64_t>(d.values().begin(), d.values().end());
      j["size"] = d.size();
      j["diam"] = d.diam();
      emit_json(out, j);
      break;
    }
    case Format::kCsv:
      out << "set,diff,size,diam\n"
          << quoted(to_literal(s)) << ',' << quoted(join(d.values())) << ',' << d.size() << ','
          << d.diam() << '\n';
      break;
  }
  return 0;
}

int cmd_greedy(const std::string& literal, std::optional<std::int64_t> horizon, const Common& common,
               std::ostream& out, std::ostream& err) {
  const IntSet s = read_set(literal, err);
  const IntSet norm = normalize(s).set;
  const PeriodicSet periodic = periodic_packing(norm);
  const std::int64_t default_horizon = periodic.anchor() + periodic.period() + diameter(norm);
  const GreedyTrace trace = run_greedy(norm, horizon.value_or(default_horizon));

  switch (common.format) {
    case Format::kPlain:
      out << "t = " << join(trace.chosen) << '\n'
          << "anchor = " << periodic.anchor() << " period = " << periodic.period() << '\n'
          << "pattern = " << periodic.pattern_string() << '\n'
          << "density = " << show(periodic.density(), common) << '\n';
      break;
    case Format::kJson: {
      Json j;
      j["S"] = to_vector(s);
      j["t"] = trace.chosen;
      j["anchor"] = periodic.anchor();
      j["period"] = periodic.period();
      j["pattern"] = periodic.pattern_string();
      put(j, "density", periodic.density(), common);
      emit_json(out, j);
      break;
    }
    case Format::kCsv:
      out << "set,t,anchor,period,pattern,density" << (common.with_float ? ",density_float" : "")
          << '\n'
          << quoted(to_literal(s)) << ',' << quoted(join(trace.chosen)) << ',' << periodic.anchor()
          << ',' << periodic.period() << ',' << periodic.pattern_string() << ','
          << periodic.density();
      if (common.with_float) out << ',' << format_decimal(periodic.density());
      out << '\n';
      break;
  }
  return 0;
}

int cmd_bounds(const std::string& literal, const Common& common, std::ostream& out, std::ostream& err) {
  const IntSet s = read_set(literal, err);
  const BoundsReport b = bounds_report(s);
  switch (common.format) {
    case Format::kPlain:
      out << "lower = " << show(b.lower, common) << " upper = " << show(b.upper, common) << " ("
          << to_string(b.active_upper) << ") initial_run_n = " << b.initial_run_n << '\n';
      if (s.size() >= 5) {
        out << "weinstein(k=" << s.size() << ") = "
            << show(weinstein_bound(static_cast<std::int64_t>(s.size())), common)
            << " (informational)\n";
      }
      break;
    case Format::kJson: {
      Json j;
      j["S"] = to_vector(s);
      put(j, "lower", b.lower, common);
      put(j, "upper", b.upper, common);
      j["initial_run_n"] = b.initial_run_n;
      j["active_upper"] = std::string(to_string(b.active_upper));
      emit_json(out, j);
      break;
    }
    case Format::kCsv:
      out << "set,lower,upper,initial_run_n,active_upper"
          << (common.with_float ? ",lower_float,upper_float" : "") << '\n'
          << quoted(to_literal(s)) << ',' << b.lower << ',' << b.upper << ',' << b.initial_run_n
          << ',' << to_string(b.active_upper);
      if (common.with_float) out << ',' << format_decimal(b.lower) << ',' << format_decimal(b.upper);
      out << '\n';
      break;
  }
  return 0;
}

int cmd_exact(const std::string& literal, std::optional<int> max_period, const Common& common,
              std::ostream& out, std::ostream& err) {
  const IntSet s = read_set(literal, err);
  const DensityResult r = exact_packing_density(s);
  std::optional<Rational> brute;
  if (max_period) brute = brute_force_periodic(s, *max_period);

  switch (common.format) {
    case Format::kPlain:
      out << show(r.density, common) << " (period " << r.witness_period << ", pattern "
          << r.pattern_string() << ")\n";
      if (brute) {
        out << "brute force (period <= " << *max_period << ") = " << show(*brute, common) << '\n';
      }
      break;
    case Format::kJson: {
      Json j;
      j["S"] = to_vector(s);
      put(j, "density", r.density, common);
      j["period"] = r.witness_period;
      j["pattern"] = r.pattern_string();
      j["states"] = r.states;
      if (brute) put(j, "brute_force", *brute, common);
      emit_json(out, j);
      break;
    }
    case Format::kCsv:
      out << "set,density,period,pattern,states" << (brute ? ",brute_force" : "")
          << (common.with_float ? ",density_float" : "") << '\n'
          << quoted(to_literal(s)) << ',' << r.density << ',' << r.witness_period << ','
          << r.pattern_string() << ',' << r.states;
      if (brute) out << ',' << *brute;
      if (common.with_float) out << ',' << format_decimal(r.density);
      out << '\n';
      break;
  }
  return 0;
}

void print_survey_table(const SurveyReport& report, const Common& common, std::ostream& out) {
  out << "k = " << report.k << " max_elem = " << report.max_elem
      << (report.use_oracle ? "" : " (greedy only)") << " sets = " << report.rows.size() << '\n';
  out << "set                 |diff|  lower   upper   greedy  exact   period\n";
  for (const auto& row : report.rows) {
    const auto cell = [](std::string text, std::size_t width) {
      if (text.size() < width) text.append(width - text.size(), ' ');
      return text;
    };
    out << cell(to_braced(row.set), 20) << cell(std::to_string(row.diff_size), 8)
        << cell(row.lower.to_string(), 8) << cell(row.upper.to_string(), 8)
        << cell(row.greedy.to_string(), 8) << cell(row.exact ? row.exact->to_string() : "-", 8)
        << row.period << '\n';
  }
  out << "minimum = " << show(report.minimum, common) << " at ";
  for (std::size_t i = 0; i < report.minimizers.size(); ++i) {
    out << (i ? ", " : "") << to_braced(report.minimizers[i]);
  }
  out << '\n';
}

int cmd_survey(const SurveyOptions& options, const Common& common, std::ostream& out) {
  const SurveyReport report = run_survey(options);
  switch (common.format) {
    case Format::kPlain:
      print_survey_table(report, common, out);
      break;
    case Format::kJson:
      emit_json(out, report_to_json(report, common.with_float));
      break;
    case Format::kCsv:
      out << report_to_csv(report, common.with_float);
      break;
  }
  return 0;
}

int cmd_verify(std::int64_t max_elem, unsigned jobs, std::optional<std::string> checkpoint,
               const Common& common, std::ostream& out) {
  std::optional<std::filesystem::path> path;
  if (checkpoint) path = *checkpoint;
  const TheoremVerdict v = verify_main_theorem(max_elem, jobs, path);
  switch (common.format) {
    case Format::kPlain:
      out << v.summary() << '\n'
          << "checked " << v.sets_checked << " canonical 4-sets with max element <= " << v.max_elem
          << "; max |diff| = " << v.max_diff_size << "; d_p({0,1,4,6}) = "
          << show(v.reference_density, common) << '\n'
          << "larger sets: every 4-set has |diff(S)| <= 7, so the greedy bound gives d_p(S) >= 1/7\n";
      for (const auto& s : v.failures) out << "failure: " << to_braced(s) << '\n';
      break;
    case Format::kJson:
      emit_json(out, verdict_to_json(v));
      break;
    case Format::kCsv: {
      std::string minimizers;
      for (std::size_t i = 0; i < v.minimizers.size(); ++i) {
        minimizers += (i ? " " : "") + to_braced(v.minimizers[i]);
      }
      out << "verdict,max_elem,sets_checked,max_diff_size,minimum,minimizers\n"
          << (v.pass ? "PASS" : "FAIL") << ',' << v.max_elem << ',' << v.sets_checked << ','
          << v.max_diff_size << ',' << v.minimum << ',' << quoted(minimizers) << '\n';
      break;
    }
  }
  return v.pass ? 0 : 3;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Packing densities of finite integer sets", "packdens"};
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  const std::map<std::string, Format> formats{
      {"plain", Format::kPlain}, {"json", Format::kJson}, {"csv", Format::kCsv}};
  app.add_option("--format", common.format, "Output format: plain, json or csv")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->capture_default_str();
  app.add_flag("--float", common.with_float, "Add decimal approximations next to exact values");

  std::string literal;
  const auto add_set = [&](CLI::App* sub) {
    sub->add_option("set", literal, "Set literal, e.g. 0,1,4,6 (use -- before negative values)")
        ->required();
  };

  auto* diff = app.add_subcommand("diff", "Difference set, its size and the diameter");
  add_set(diff);

  std::optional<std::int64_t> horizon;
  auto* greedy = app.add_subcommand("greedy", "Greedy packing, its period and density");
  add_set(greedy);
  greedy->add_option("--horizon", horizon, "List t_i below this position")
      ->check(CLI::PositiveNumber);

  auto* bounds = app.add_subcommand("bounds", "Closed-form lower and upper bounds");
  add_set(bounds);

  std::optional<int> max_period;
  auto* exact = app.add_subcommand("exact", "Exact packing density with a periodic witness");
  add_set(exact);
  exact->add_option("--max-period", max_period, "Also run the brute-force periodic search")
      ->check(CLI::Range(1, 20));

  SurveyOptions survey_opts;
  std::optional<std::string> checkpoint;
  bool greedy_only = false;
  auto* survey = app.add_subcommand("survey", "Bounds, greedy and exact density for every canonical set");
  survey->add_option("--k", survey_opts.k, "Set cardinality")->capture_default_str();
  survey->add_option("--max-elem", survey_opts.max_elem, "Largest element")->capture_default_str();
  survey->add_flag("--no-oracle", greedy_only, "Skip the exact oracle (greedy lower-bound sweep)");
  survey->add_option("--jobs", survey_opts.jobs, "Worker threads")->check(CLI::PositiveNumber);
  survey->add_option("--checkpoint", checkpoint, "Append-only row log; resumes if present");

  std::int64_t verify_max = 16;
  unsigned verify_jobs = 1;
  auto* verify = app.add_subcommand("verify", "Check min d_p over 4-sets is 1/7, attained by {0,1,4,6}");
  verify->add_option("--max-elem", verify_max, "Largest element swept")->capture_default_str();
  verify->add_option("--jobs", verify_jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--checkpoint", checkpoint, "Append-only row log; resumes if present");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*diff) return cmd_diff(literal, common, out, err);
    if (*greedy) return cmd_greedy(literal, horizon, common, out, err);
    if (*bounds) return cmd_bounds(literal, common, out, err);
    if (*exact) return cmd_exact(literal, max_period, common, out, err);
    if (*survey) {
      survey_opts.use_oracle = !greedy_only;
      if (checkpoint) survey_opts.checkpoint = *checkpoint;
      return cmd_survey(survey_opts, common, out);
    }
    if (*verify) return cmd_verify(verify_max, verify_jobs, checkpoint, common, out);
  } catch (const std::exception& e) {
    std::string message = e.what();
    std::replace(message.begin(), message.end(), '\n', ' ');
    err << "error: " << message << '\n';
    return 1;
  }
  return 2;
}

}  // namespace packdens::cli
