#include <gtest/gtest.h>

#include <sstream>

#include "cli_app.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

std::string corpus(std::string const& stem) { return std::string(LPA_CORPUS_DIR) + "/" + stem + ".graph"; }

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = lpa::cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

lpa::report::Json json(Outcome const& o) { return lpa::report::Json::parse(o.out); }

}  // namespace

TEST(Cli, NormalForm) {
  auto o = run({"nf", corpus("toeplitz"), "f*f'"});
  ASSERT_EQ(o.code, 0) << o.err;
  auto j = json(o);
  EXPECT_EQ(j["command"], "nf");
  EXPECT_EQ(j["graph"], "toeplitz");
  EXPECT_EQ(j["result"]["normal_form"], "v - e*e'");
}

TEST(Cli, MulAndEq) {
  auto m = json(run({"mul", corpus("toeplitz"), "e'", "e"}));
  EXPECT_EQ(m["result"]["product"], "v");
  auto e = json(run({"eq", corpus("toeplitz"), "e*e' + f*f'", "v"}));
  EXPECT_EQ(e["result"]["equal"], true);
  auto f = json(run({"--field", "fp:2", "eq", corpus("toeplitz"), "2*e", "0*v"}));
  EXPECT_EQ(f["result"]["equal"], true);
}

TEST(Cli, Analyze) {
  auto j = json(run({"analyze", corpus("toeplitz")}));
  auto const& r = j["result"];
  EXPECT_EQ(r["semiprime_path_algebra"], false);
  EXPECT_EQ(r["line_points"], lpa::report::Json::array({"w"}));
  EXPECT_EQ(r["socle_essential"], true);
  ASSERT_EQ(r["cycles"].size(), 1u);
  EXPECT_EQ(r["cycles"][0]["has_exit"], true);
  EXPECT_EQ(r["bifurcations"], lpa::report::Json::array({"v"}));
}

TEST(Cli, Decompose) {
  auto j = json(run({"decompose", corpus("a2")}));
  EXPECT_EQ(j["result"]["sizes"], lpa::report::Json::array({2}));
  EXPECT_EQ(j["result"]["basis_count"], 4);
  EXPECT_EQ(j["result"]["reduced_basis"].size(), 4u);
  auto t = json(run({"--truncate", "3", "decompose", corpus("toeplitz")}));
  EXPECT_EQ(t["result"]["restricted_to"], lpa::report::Json::array({"w"}));
  EXPECT_EQ(t["result"]["sizes"], lpa::report::Json::array({4}));
  EXPECT_EQ(t["result"]["complete"], false);
}

TEST(Cli, GroupInverse) {
  auto j = json(run({"group-inverse", corpus("a2"), "2*u + f"}));
  EXPECT_EQ(j["result"]["group_inverse"], "1/2*u + 1/4*f");
  auto bad = run({"group-inverse", corpus("a2"), "f"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_EQ(lpa::report::Json::parse(bad.err)["error"]["kind"], "not_group_invertible");
  auto cyc = run({"group-inverse", corpus("toeplitz"), "v"});
  EXPECT_EQ(cyc.code, 2);
  EXPECT_EQ(lpa::report::Json::parse(cyc.err)["error"]["kind"], "precondition");
}

TEST(Cli, SocleQuotientRestrictClosure) {
  EXPECT_EQ(json(run({"socle-member", corpus("toeplitz"), "f*f'"}))["result"]["member"], true);
  EXPECT_EQ(json(run({"socle-member", corpus("toeplitz"), "e"}))["result"]["member"], false);

  auto q = json(run({"--set", "w", "quotient", corpus("toeplitz")}));
  EXPECT_EQ(q["result"]["images"]["f"], nullptr);
  EXPECT_EQ(q["result"]["images"]["e"], "e");
  EXPECT_EQ(q["result"]["graph"]["vertices"], lpa::report::Json::array({"v"}));

  auto r = json(run({"--set", "w", "--truncate", "2", "restrict", corpus("toeplitz")}));
  EXPECT_EQ(r["result"]["entering_paths"], lpa::report::Json::array({"f", "e*f"}));

  auto c = json(run({"--set", "w", "closure", corpus("a2")}));
  EXPECT_EQ(c["result"]["closure"], lpa::report::Json::array({"u", "w"}));
  EXPECT_EQ(c["result"]["saturated"], false);

  auto missing = run({"closure", corpus("a2")});
  EXPECT_EQ(missing.code, 2);
}

TEST(Cli, Denominator) {
  auto j = json(run({"denominator", corpus("toeplitz"), "v", "e'"}));
  EXPECT_EQ(j["result"]["r"], "e");
  EXPECT_EQ(j["result"]["iterations"], 1);
  EXPECT_EQ(j["result"]["q_r"], "v");
}

TEST(Cli, ToeplitzCheck) {
  auto j = json(run({"toeplitz-check", corpus("toeplitz")}));
  auto const& r = j["result"];
  EXPECT_EQ(r["recognized"], true);
  EXPECT_EQ(r["exact_sequence"]["pass"], true);
  EXPECT_EQ(r["sandwich"]["applicable"], true);
  EXPECT_EQ(r["sandwich"]["pass"], true);
  auto fam = json(run({"--degree", "2", "toeplitz-check", corpus("toeplitz_a2")}));
  EXPECT_EQ(fam["result"]["recognized"], true);
  EXPECT_EQ(fam["result"]["sandwich"]["applicable"], false);
  auto no = json(run({"toeplitz-check", corpus("r1")}));
  EXPECT_EQ(no["result"]["recognized"], false);
}

TEST(Cli, OnlyAndPretty) {
  auto o = run({"--only", "normal_form", "nf", corpus("toeplitz"), "f*f'"});
  EXPECT_EQ(o.out, "\"v - e*e'\"\n");
  auto p = run({"--pretty", "--only", "normal_form", "nf", corpus("toeplitz"), "f*f'"});
  EXPECT_EQ(p.out, "v - e*e'\n");
  auto full = run({"--pretty", "nf", corpus("toeplitz"), "e"});
  EXPECT_EQ(full.out, "command: nf\ngraph: toeplitz\nexpression: e\nnormal_form: e\n");
  EXPECT_EQ(run({"--only", "nope", "nf", corpus("toeplitz"), "e"}).code, 2);
}

TEST(Cli, Errors) {
  auto parse = run({"nf", corpus("toeplitz"), "e +"});
  EXPECT_EQ(parse.code, 2);
  auto j = lpa::report::Json::parse(parse.err);
  EXPECT_EQ(j["error"]["kind"], "parse");
  EXPECT_EQ(j["error"]["line"], 1);
  EXPECT_TRUE(parse.out.empty());

  auto io = run({"analyze", corpus("does_not_exist")});
  EXPECT_EQ(io.code, 2);
  EXPECT_EQ(lpa::report::Json::parse(io.err)["error"]["kind"], "io");

  auto usage = run({"frobnicate"});
  EXPECT_EQ(usage.code, 2);
  EXPECT_EQ(lpa::report::Json::parse(usage.err)["error"]["kind"], "usage");

  EXPECT_EQ(run({"nf", corpus("toeplitz")}).code, 2);
  EXPECT_EQ(run({"--field", "fp:4", "nf", corpus("toeplitz"), "e"}).code, 2);

  auto help = run({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("toeplitz-check"), std::string::npos);
}

TEST(Cli, OutputIsDeterministic) {
  auto a = run({"analyze", corpus("cycle_exit")});
  auto b = run({"analyze", corpus("cycle_exit")});
  EXPECT_EQ(a.out, b.out);
}
