#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "corpus.hpp"
#include "miura/io.hpp"

namespace miura {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("miura_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }
  std::string graph(const std::string& name, const MarkedSemiGraph& m) { return write(name, write_graph(m)); }

  fs::path dir_;
};

TEST_F(CliTest, ValidateCorpusFiles) {
  for (const auto& named : testing::corpus()) {
    const auto r = run({"validate", graph(named.name + ".json", named.graph)});
    EXPECT_EQ(r.code, cli::kPass) << named.name << r.err;
    const auto j = Json::parse(r.out);
    EXPECT_TRUE(j["valid"].get<bool>());
  }
}

TEST_F(CliTest, ValidateDegreeTwoVertex) {
  const auto path = write("bad.json", R"({"vertices":["v7"],"edges":[{"id":"e","ends":["v7","v7"]}],"marking":[]})");
  const auto r = run({"validate", path});
  EXPECT_EQ(r.code, cli::kSemanticFailure);
  EXPECT_NE(r.out.find("v7"), std::string::npos);
}

TEST_F(CliTest, MalformedJsonIsExitTwo) {
  EXPECT_EQ(run({"validate", write("broken.json", "{\"vertices\": [")}).code, cli::kMalformedInput);
  EXPECT_EQ(run({"validate", (dir_ / "missing.json").string()}).code, cli::kMalformedInput);
  EXPECT_EQ(run({"count", "--p", "7", "--builtin", "tripod"}).code, cli::kMalformedInput);
  EXPECT_EQ(run({"count", "--p", "8", "--kind", "strict", "--builtin", "tripod"}).code, cli::kMalformedInput);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kMalformedInput);
}

TEST_F(CliTest, EnumerateLoopWithLeg) {
  const auto path = graph("loop_with_leg.json", builders::loop_with_leg());
  const auto all = run({"enumerate", "--p", "7", "--kind", "strict", path});
  EXPECT_EQ(all.code, cli::kPass);
  EXPECT_EQ(lines(all.out), 6u);
  const auto minus_one = run({"enumerate", "--p", "7", "--kind", "strict", "--constraint", "-1", path});
  EXPECT_EQ(lines(minus_one.out), 6u);
  EXPECT_EQ(minus_one.out, all.out);
  const auto two = run({"enumerate", "--p", "7", "--kind", "strict", "--constraint", "2", path});
  EXPECT_EQ(two.code, cli::kPass);
  EXPECT_EQ(lines(two.out), 0u);
  const auto limited = run({"enumerate", "--p", "7", "--kind", "strict", "--limit", "2", path});
  EXPECT_EQ(lines(limited.out), 2u);
}

TEST_F(CliTest, EnumerateRejectsWrongConstraintLength) {
  const auto r = run({"enumerate", "--p", "7", "--kind", "strict", "--constraint", "1,2", "--builtin", "loop_with_leg"});
  EXPECT_NE(r.code, cli::kPass);
}

TEST_F(CliTest, CountExamples) {
  auto total = [](const Outcome& r) { return Json::parse(r.out)["total"].get<int>(); };
  EXPECT_EQ(total(run({"count", "--p", "5", "--kind", "strict", graph("tripod.json", builders::tripod())})), 10);
  EXPECT_EQ(total(run({"count", "--p", "11", "--kind", "strict", graph("theta.json", builders::theta())})), 0);

  const auto r = run({"count", "--p", "5", "--kind", "strict", "--by-exponent",
                      graph("cycle3.json", builders::cycle_with_legs(3))});
  ASSERT_EQ(r.code, cli::kPass);
  const auto j = Json::parse(r.out);
  ASSERT_EQ(j["by_exponent"].size(), 1u);
  EXPECT_EQ(j["by_exponent"][0]["exponent"], Json::parse("[4,4,4]"));
  EXPECT_EQ(j["by_exponent"][0]["count"], 4);
}

TEST_F(CliTest, CountBothMethodsAgree) {
  const auto r = run({"count", "--p", "7", "--kind", "balanced", "--method", "both", "--builtin", "cycle:3"});
  ASSERT_EQ(r.code, cli::kPass) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_TRUE(j["agree"].get<bool>());
  EXPECT_EQ(j["total"], 129);
}

TEST_F(CliTest, MiuraCommand) {
  const auto fig = figure_fixture();
  const auto g = graph("figure.json", fig.graph);
  const auto n = write("figure_numbering.json", write_numbering(fig.graph, fig.numbering));
  const auto r = run({"miura", n, g});
  ASSERT_EQ(r.code, cli::kPass) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["kind"], "balanced");
  std::vector<int> values;
  for (const auto& [k, v] : j["edge_values"].items()) values.push_back(v.get<int>());
  EXPECT_EQ(values, (std::vector<int>{0, 4, 4, 1, 3, 2, 1}));

  const auto t = builders::tripod();
  const auto ok = run({"miura", write("t1.json", write_numbering(t, BranchNumbering(Prime{11}, {1, 10, 2, 9, 9, 2}))),
                       "--builtin", "tripod"});
  ASSERT_EQ(ok.code, cli::kPass);
  EXPECT_EQ(Json::parse(ok.out)["edge_values"], Json::parse(R"({"l1":0,"l2":4,"l3":4})"));

  const auto bad = run({"miura", write("t2.json", write_numbering(t, BranchNumbering(Prime{5}, {0, 0, 2, 3, 4, 1}))),
                        "--builtin", "tripod"});
  EXPECT_EQ(bad.code, cli::kSemanticFailure);
}

TEST_F(CliTest, VerifyCommands) {
  EXPECT_EQ(run({"verify", "pp004", "--p", "13"}).code, cli::kPass);
  EXPECT_EQ(run({"verify", "pp004"}).code, cli::kPass);
  EXPECT_EQ(run({"verify", "p048", "--p", "7", graph("dumbbell.json", builders::dumbbell())}).code, cli::kPass);
  EXPECT_EQ(run({"verify", "p048", "--p", "7", graph("tripod.json", builders::tripod())}).code, cli::kNotApplicable);
  EXPECT_EQ(run({"verify", "p048-structure", "--p", "7", "--builtin", "cycle:2"}).code, cli::kPass);
  EXPECT_EQ(run({"verify", "miura", "--p", "11", "--builtin", "tripod"}).code, cli::kPass);
  EXPECT_EQ(run({"verify", "figure"}).code, cli::kPass);
}

TEST_F(CliTest, ShowIsCanonical) {
  const auto r = run({"show", "--builtin", "tripod"});
  EXPECT_EQ(r.out, write_graph(builders::tripod()));
}

TEST_F(CliTest, BinaryEndToEnd) {
  const auto out = dir_ / "out.txt";
  const std::string cmd = std::string(MIURA_CLI_PATH) + " enumerate --p 7 --kind strict --builtin loop_with_leg > " +
                          out.string();
  ASSERT_EQ(std::system(cmd.c_str()), 0);
  std::ifstream in(out);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(lines(buf.str()), 6u);

  const std::string na = std::string(MIURA_CLI_PATH) + " verify p048 --p 7 --builtin tripod > /dev/null";
  const int status = std::system(na.c_str());
  EXPECT_EQ(WEXITSTATUS(status), cli::kNotApplicable);
}

}  // namespace
}  // namespace miura
