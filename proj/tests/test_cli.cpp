#include "cospec_cli.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

auto invoke(std::vector<std::string> args, const std::string& input = "") -> Outcome {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cospec::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

auto json_of(const Outcome& o) -> cospec::cli::Json { return cospec::cli::Json::parse(o.out); }

} // namespace

TEST(Cli, ConstructThenCharpoly) {
  const Outcome made = invoke({"construct", "double-star", "1", "4"});
  ASSERT_EQ(made.code, 0);
  EXPECT_EQ(made.out, "FqPA?\n");
  const Outcome poly = invoke({"charpoly", "FqPA?"});
  EXPECT_EQ(poly.code, 0);
  EXPECT_EQ(poly.out, "x^7 - 6*x^5 + 4*x^3\n");
}

TEST(Cli, ConstructionNames) {
  EXPECT_EQ(invoke({"construct", "A", "2"}).out, "EIr?\n");
  EXPECT_EQ(invoke({"construct", "B", "2"}).out, "FC`zo\n");
  EXPECT_EQ(invoke({"construct", "R"}).out, "El`?\n");
  EXPECT_EQ(invoke({"construct", "star-mate", "2", "2"}).out, cospec::write_graph6(cospec::star_mate(2, 2)) + "\n");
  EXPECT_EQ(invoke({"construct", "A"}).code, 2);
  EXPECT_EQ(invoke({"construct", "hexagon"}).code, 2);
  EXPECT_EQ(invoke({"construct", "A", "x"}).code, 3);
  EXPECT_EQ(invoke({"construct", "A", "0"}).code, 3);
}

TEST(Cli, MethodsEmitIdenticalText) {
  for (const char* g : {"P2(3,4)", "R", "K5", "El`?", "cycle(9)+K(2,3)"}) {
    const std::string exact = invoke({"charpoly", g, "--method", "exact"}).out;
    EXPECT_EQ(invoke({"charpoly", g, "--method", "sachs"}).out, exact) << g;
    EXPECT_EQ(invoke({"charpoly", g, "--method", "schwenk"}).out, exact) << g;
  }
}

TEST(Cli, CharpolyRootsAndJson) {
  const Outcome text = invoke({"charpoly", "K(2,2)", "--roots"});
  EXPECT_EQ(text.out, "x^4 - 4*x^2\nroots: -2.000000000 0.000000000 0.000000000 2.000000000\n");
  const auto j = json_of(invoke({"charpoly", "K(2,2)", "--roots", "--report", "json"}));
  EXPECT_EQ(j["polynomial"], "x^4 - 4*x^2");
  EXPECT_EQ(j["roots"].size(), 4U);
  EXPECT_EQ(j["graph"]["n"], 4);
}

TEST(Cli, ReadsGraph6LinesFromStdin) {
  const Outcome o = invoke({"charpoly"}, "Bw\nA_\n\n@\n");
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out, "x^3 - 3*x - 2\nx^2 - 1\nx\n");
  EXPECT_EQ(invoke({"charpoly", "-"}, "Bw\n").out, "x^3 - 3*x - 2\n");
}

TEST(Cli, DsExitCodes) {
  const Outcome five = invoke({"ds", "P2(1,5)"});
  EXPECT_EQ(five.code, 0);
  const Outcome six = invoke({"ds", "P2(1,6)", "--report", "json"});
  EXPECT_EQ(six.code, 10);
  const auto j = json_of(six);
  EXPECT_FALSE(j["ds"].get<bool>());
  ASSERT_EQ(j["mates"].size(), 1U);
  EXPECT_EQ(j["mates"][0]["classification"], "FORM_I");
  EXPECT_TRUE(j["scope"]["exhaustive"].get<bool>());
}

TEST(Cli, MatesAlwaysExitZeroAndCarryDsFlag) {
  const Outcome o = invoke({"mates", "P2(1,6)", "--report", "json"});
  EXPECT_EQ(o.code, 0);
  EXPECT_FALSE(json_of(o)["ds"].get<bool>());
  const Outcome text = invoke({"mates", "P2(1,6)"});
  EXPECT_NE(text.out.find("mates: 1"), std::string::npos);
  EXPECT_NE(text.out.find("FORM_I"), std::string::npos);
}

TEST(Cli, WorkerCountDoesNotChangeReport) {
  auto strip = [](cospec::cli::Json j) {
    j.erase("elapsed_seconds");
    j.erase("workers");
    return j;
  };
  const auto one = strip(json_of(invoke({"mates", "P2(1,8)", "--report", "json", "--workers", "1"})));
  const auto four = strip(json_of(invoke({"mates", "P2(1,8)", "--report", "json", "--workers", "4"})));
  EXPECT_EQ(one, four);
  EXPECT_EQ(one["mate_count"], 2);
}

TEST(Cli, ForbiddenAndDecompose) {
  const auto f = json_of(invoke({"forbidden", "P2(2,2)", "--report", "json"}));
  EXPECT_FALSE(f["clear"].get<bool>());
  EXPECT_EQ(f["patterns"][2]["pattern"], "P2(2,2)");
  EXPECT_TRUE(f["patterns"][2]["present"].get<bool>());

  const Outcome d = invoke({"decompose", "B(2)+4K1", "--report", "json"});
  EXPECT_EQ(d.code, 0);
  const auto j = json_of(d);
  EXPECT_EQ(j["classification"], "FORM_II");
  EXPECT_EQ(j["sizes"]["C"], 2);
  EXPECT_TRUE(j["formula_matches"].get<bool>());
  EXPECT_EQ(invoke({"decompose", "K(2,3)"}).code, 1);
}

TEST(Cli, ErrorCodes) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({"charpoly", "Bw", "--method", "magic"}).code, 2);
  const Outcome parse = invoke({"charpoly", "Bx"});
  EXPECT_EQ(parse.code, 3);
  EXPECT_FALSE(parse.err.empty());
  EXPECT_TRUE(parse.out.empty());
  EXPECT_EQ(invoke({"charpoly", "P2(1,"}).code, 3);
  EXPECT_EQ(invoke({"mates", "path(17)"}).code, 4);
  EXPECT_EQ(invoke({"charpoly", "path(30)", "--method", "sachs"}).code, 4);
  EXPECT_EQ(invoke({"charpoly", "K40+K40"}).code, 4);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}
