// End-to-end tests of the zhdd executable.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"
#include "zhdd/json_io.hpp"
#include "zhdd/random_sqmdd.hpp"

using namespace zhdd;
using namespace zhdd::testing;
namespace fs = std::filesystem;

namespace {

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("zhdd_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  void write(const std::string& name, const Json& j) const { std::ofstream(path(name)) << j.dump(); }

  Json read(const std::string& name) const { return read_json_file(path(name)); }

  int run(const std::string& args) const {
    const std::string cmd = std::string(ZHDD_CLI) + " " + args + " > " + path("stdout.txt") + " 2> " +
                            path("stderr.txt");
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string out() const {
    std::ifstream in(path("stdout.txt"));
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }

  fs::path dir_;
};

Json z03() { return Json::parse(R"({"kind":"z_spider","params":{"inputs":0,"outputs":3}})"); }

}  // namespace

TEST_F(Cli, SpiderEquivalentToGhzDiagram) {
  write("zspider03.json", z03());
  write("ghz_sqmdd.json", sqmdd_to_json(canonical_from_vector(DenseVector{1, 0, 0, 0, 0, 0, 0, 1})));
  EXPECT_EQ(run("check-equiv " + path("zspider03.json") + " " + path("ghz_sqmdd.json")), 0);
}

TEST_F(Cli, InequivalentDiagrams) {
  write("a.json", vector_to_json(DenseVector{1, 0}));
  write("b.json", vector_to_json(DenseVector{2, 0}));
  EXPECT_EQ(run("check-equiv " + path("a.json") + " " + path("b.json")), 1);
  EXPECT_EQ(run("check-equiv --up-to-scalar " + path("a.json") + " " + path("b.json")), 0);
}

TEST_F(Cli, SelfEquivalence) {
  std::mt19937_64 rng(12);
  write("d.json", sqmdd_to_json(random_sqmdd(rng)));
  write("t.json", z03());
  EXPECT_EQ(run("check-equiv " + path("d.json") + " " + path("d.json")), 0);
  EXPECT_EQ(run("check-equiv " + path("t.json") + " " + path("t.json")), 0);
}

TEST_F(Cli, ReduceOnesTree) {
  write("raw_tree.json", sqmdd_to_json(naive_tree(DenseVector(8, 1.0))));
  ASSERT_EQ(run("reduce " + path("raw_tree.json") + " -o " + path("out.json") + " --trace " + path("trace.json")), 0);
  const Sqmdd d = sqmdd_from_json(read("out.json"));
  EXPECT_EQ(d.root, kTerminal);
  EXPECT_EQ(d.height, 3U);
  EXPECT_FALSE(read("trace.json").empty());
}

TEST_F(Cli, CanonicalThenInterpret) {
  write("v.json", vector_to_json(worked_example_vector()));
  ASSERT_EQ(run("canonical " + path("v.json") + " -o " + path("c.json")), 0);
  ASSERT_EQ(run("interpret " + path("c.json") + " -o " + path("back.json")), 0);
  EXPECT_LT(max_deviation(vector_from_json(read("back.json")), worked_example_vector()), 1e-9);
}

TEST_F(Cli, TranslationRoundTrip) {
  write("v.json", vector_to_json(worked_example_vector()));
  ASSERT_EQ(run("canonical " + path("v.json") + " -o " + path("c.json")), 0);
  ASSERT_EQ(run("to-zh " + path("c.json") + " -o " + path("t.json")), 0);
  ASSERT_EQ(run("--assert-stages to-sqmdd " + path("t.json") + " -o " + path("d.json")), 0);
  EXPECT_EQ(run("check-equiv " + path("d.json") + " " + path("v.json")), 0);
  // Emitting is deterministic, so the canonical file is reproduced byte for byte.
  EXPECT_EQ(read("d.json"), read("c.json"));
}

TEST_F(Cli, InterpretMap) {
  write("g.json", Json::parse(R"({"kind":"gadget"})"));
  ASSERT_EQ(run("interpret " + path("g.json") + " -o " + path("m.json")), 0);
  EXPECT_EQ(detect_document(read("m.json")), DocumentKind::Matrix);
}

TEST_F(Cli, MalformedInput) {
  std::ofstream(path("bad.json")) << "{ not json";
  EXPECT_EQ(run("interpret " + path("bad.json")), 2);
  EXPECT_EQ(run("interpret " + path("missing.json")), 2);
  write("kind.json", Json::parse(R"({"kind":"mystery"})"));
  EXPECT_EQ(run("to-sqmdd " + path("kind.json")), 2);
  EXPECT_EQ(run("no-such-command"), 2);
}

TEST_F(Cli, ResourceCap) {
  write("big.json", Json::parse(R"({"kind":"z_spider","params":{"inputs":0,"outputs":20}})"));
  EXPECT_EQ(run("interpret " + path("big.json")), 3);
  write("five.json", Json::parse(R"({"kind":"z_spider","params":{"inputs":0,"outputs":5}})"));
  EXPECT_EQ(run("--max-qubits 4 interpret " + path("five.json")), 3);
}

TEST_F(Cli, VerifyFiltered) {
  EXPECT_EQ(run("verify --filter monoid --json"), 0);
  const Json report = Json::parse(out());
  ASSERT_TRUE(report.is_array());
  EXPECT_FALSE(report.empty());
  for (const Json& r : report) EXPECT_NE(r.at("status"), "FAIL") << r.at("name");
}

TEST_F(Cli, ExportDot) {
  write("d.json", sqmdd_to_json(canonical_from_vector(worked_example_vector())));
  ASSERT_EQ(run("export-dot " + path("d.json")), 0);
  EXPECT_NE(out().find("digraph"), std::string::npos);
}
