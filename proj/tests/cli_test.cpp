#include <gtest/gtest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "packdens/commands.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = packdens::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, Diff) {
  EXPECT_EQ(run({"diff", "0,1,4,6"}).out, "diff = {0,1,2,3,4,5,6} |diff| = 7 diam = 6\n");
  EXPECT_EQ(run({"diff", "5"}).out, "diff = {0} |diff| = 1 diam = 0\n");
  EXPECT_EQ(run({"diff", "0,2,7"}).out, "diff = {0,2,5,7} |diff| = 4 diam = 7\n");
  EXPECT_EQ(run({"diff", "-2,0"}).out, "diff = {0,2} |diff| = 2 diam = 2\n");
}

TEST(Cli, Greedy) {
  EXPECT_EQ(run({"greedy", "0,4,5"}).out,
            "t = 0,2,8,10\nanchor = 0 period = 8\npattern = 10100000\ndensity = 1/4\n");
  const Result ruler = run({"greedy", "0,1,4,6", "--format", "json"});
  EXPECT_EQ(ruler.out,
            R"({"S":[0,1,4,6],"t":[0,7],"anchor":0,"period":7,"pattern":"1000000","density":"1/7"})"
            "\n");
  EXPECT_EQ(run({"greedy", "0", "--horizon", "3"}).out.substr(0, 10), "t = 0,1,2\n");
}

TEST(Cli, BoundsAndExact) {
  EXPECT_EQ(run({"bounds", "0,2,7"}).out,
            "lower = 1/4 upper = 1/3 (disjointness) initial_run_n = 0\n");
  EXPECT_EQ(run({"bounds", "0,1,4,6", "--format", "json"}).out,
            R"({"S":[0,1,4,6],"lower":"1/7","upper":"1/7","initial_run_n":6,"active_upper":"basis"})"
            "\n");
  EXPECT_NE(run({"bounds", "0,1,2,3,4"}).out.find("weinstein(k=5) = 12/17"), std::string::npos);
  EXPECT_EQ(run({"exact", "0,1,4,6"}).out, "1/7 (period 7, pattern 1000000)\n");
  EXPECT_EQ(run({"exact", "0,1,4,6", "--format", "json"}).out,
            R"({"S":[0,1,4,6],"density":"1/7","period":7,"pattern":"1000000","states":7})"
            "\n");
  EXPECT_EQ(run({"exact", "0,4,5", "--max-period", "12"}).out,
            "1/3 (period 3, pattern 100)\nbrute force (period <= 12) = 1/3\n");
}

TEST(Cli, FloatAddsApproximationWithoutReplacingExactValue) {
  EXPECT_EQ(run({"exact", "0,1,4,6", "--float"}).out,
            "1/7 (~0.142857) (period 7, pattern 1000000)\n");
  const auto j = nlohmann::json::parse(run({"--float", "--format", "json", "bounds", "0,1,3"}).out);
  EXPECT_EQ(j["lower"], "1/4");
  EXPECT_DOUBLE_EQ(j["lower_float"].get<double>(), 0.25);
}

TEST(Cli, Verify) {
  const Result r = run({"verify", "--max-elem", "6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "PASS: min = 1/7 at {0,1,4,6}");
  const Result small = run({"verify", "--max-elem", "5"});
  EXPECT_EQ(small.code, 1);
  EXPECT_EQ(small.err, "error: cap below 6: {0,1,4,6} not in range\n");
}

TEST(Cli, SurveyIsDeterministicAcrossJobCounts) {
  for (const char* format : {"csv", "json"}) {
    const Result one = run({"survey", "--k", "4", "--max-elem", "10", "--format", format});
    const Result four = run({"survey", "--k", "4", "--max-elem", "10", "--jobs", "4", "--format", format});
    EXPECT_EQ(one.code, 0);
    EXPECT_EQ(one.out, four.out) << format;
  }
}

TEST(Cli, JsonOutputRoundTrips) {
  const std::vector<std::vector<std::string>> commands{
      {"diff", "0,1,4,6", "--format", "json"},
      {"greedy", "0,4,5", "--format", "json", "--float"},
      {"bounds", "0,2,7", "--format", "json"},
      {"exact", "0,1,3,7", "--format", "json", "--max-period", "8"},
      {"survey", "--k", "3", "--max-elem", "6", "--format", "json", "--float"},
      {"verify", "--max-elem", "8", "--format", "json"},
  };
  for (const auto& args : commands) {
    const std::string out = run(args).out;
    EXPECT_EQ(nlohmann::ordered_json::parse(out).dump() + "\n", out) << args[0];
  }
}

TEST(Cli, Errors) {
  const Result parse = run({"diff", "0,,1"});
  EXPECT_EQ(parse.code, 1);
  EXPECT_EQ(parse.err, "error: expected integer at position 3\n");

  const Result usage = run({"frobnicate"});
  EXPECT_EQ(usage.code, 2);
  EXPECT_EQ(usage.err.rfind("error: usage: ", 0), 0u);
  EXPECT_EQ(std::count(usage.err.begin(), usage.err.end(), '\n'), 1);

  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"exact", "0,30"}).err, "error: diam(S) = 30 exceeds automaton width cap 24\n");
  EXPECT_EQ(run({"greedy", "0,1", "--horizon", "0"}).code, 2);
}

TEST(Cli, DuplicatesWarn) {
  const Result r = run({"diff", "0,1,1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.err, "warning: duplicate elements removed: {0,1}\n");
}

}  // namespace
