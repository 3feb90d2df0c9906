#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gallery.hpp"
#include "json_io.hpp"

namespace fs = std::filesystem;
using latfix::io::Json;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  const std::string cmd = std::string(LATFIX_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string read_all(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("latfix_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
};

const char* kMarkov = R"({"matrix": [["1","0","0"],["1/3","1/3","1/3"],["0","0","1"]], "norm": "sup"})";

}  // namespace

TEST_F(Cli, GalleryMatchesStoredReports) {
  const CliRun all = run_cli("gallery all");
  EXPECT_EQ(all.code, 0) << all.out;
  for (const auto& id : latfix::gallery::case_ids()) {
    EXPECT_NE(all.out.find("match    " + id), std::string::npos) << id;
    const CliRun a = run_cli("--json gallery run " + id);
    const CliRun b = run_cli("--json gallery run " + id);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out, read_all(latfix::gallery::fixture_path(LATFIX_FIXTURE_DIR, id)));
  }
}

TEST_F(Cli, GalleryDetectsDrift) {
  for (const auto& id : latfix::gallery::case_ids()) {
    fs::copy_file(latfix::gallery::fixture_path(LATFIX_FIXTURE_DIR, id), dir_ / (id + ".json"));
  }
  write("e44.json", "{}\n");
  const CliRun r = run_cli("gallery --fixtures " + dir_.string() + " all");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("MISMATCH e44"), std::string::npos);
  EXPECT_EQ(run_cli("gallery --fixtures " + dir_.string() + " run e41").code, 0);
}

TEST_F(Cli, InvalidInputExitsTwo) {
  EXPECT_EQ(run_cli("gallery run nope").code, 2);
  EXPECT_EQ(run_cli("classify -i " + (dir_ / "missing.json").string()).code, 2);
  EXPECT_EQ(run_cli("classify -i " + write("bad.json", "{not json")).code, 2);
  EXPECT_EQ(run_cli("fixspace -i " + write("neg.json", R"({"matrix": [[1, -1], [0, 1]]})")).code, 2);
  EXPECT_EQ(run_cli("fixspace -i " + write("nc.json", R"({"operators": [{"matrix": [[0, 1], [0, 0]]},
      {"matrix": [[0, 0], [1, 0]]}]})")).code, 2);
  EXPECT_EQ(run_cli("probe --trials 5 --dim-max 3").code, 2);
  EXPECT_EQ(run_cli("").code, 2);
  EXPECT_EQ(run_cli("sup-in-fix -i " + write("s.json", kMarkov) + " -g " +
                    write("g.json", R"({"vectors": [["1", "0", "0"]]})")).code,
            2);
}

TEST_F(Cli, AnalysisCommands) {
  const CliRun c = run_cli("--json classify -i " +
                        write("f.json", R"({"ambient_dim": 3, "basis": [[1, 1, 1], [1, 0, -1]]})"));
  ASSERT_EQ(c.code, 0);
  const Json cj = Json::parse(c.out);
  EXPECT_EQ(cj["classification"]["verdict"], "LatticeSubspaceOnly");
  EXPECT_EQ(cj["sign_pattern_sublattice"], false);

  const std::string s = write("s.json", kMarkov);
  const CliRun f = run_cli("--json fixspace -i " + s);
  ASSERT_EQ(f.code, 0);
  EXPECT_EQ(Json::parse(f.out)["theorem_conformant"], true);

  const CliRun sup = run_cli("--json sup-in-fix -i " + s + " -g " +
                          write("g.json", R"({"vectors": [["1", "0", "-1"], ["-1", "0", "1"]]})"));
  ASSERT_EQ(sup.code, 0);
  EXPECT_EQ(Json::parse(sup.out)["g_F"], Json::parse(R"(["1", "1", "1"])"));

  const CliRun cyc = run_cli("--json cyclicity -i " + write("t.json", R"({"matrix": [[1, 0, 0], [1, 1, 1], [0, 0, 1]]})"));
  EXPECT_EQ(cyc.code, 0);
  EXPECT_EQ(Json::parse(cyc.out)["verdict"], "Inapplicable");

  const CliRun semi = run_cli("--json semigroup -i " + write("a.json", R"([["-2", "1"], ["1", "-2"]])"));
  EXPECT_EQ(semi.code, 0);
  EXPECT_EQ(Json::parse(semi.out)["verdict"], "Pass");

  EXPECT_EQ(run_cli("classify -i " + write("h.json", R"({"ambient_dim": 2, "basis": [[1, -1]]})")).code, 0);
}

TEST_F(Cli, ProbeIsDeterministicAcrossExecutionModes) {
  const fs::path a = dir_ / "a.jsonl";
  const fs::path b = dir_ / "b.jsonl";
  EXPECT_EQ(run_cli("probe --trials 40 --dim-max 5 --seed 3 --out " + a.string()).code, 0);
  EXPECT_EQ(run_cli("probe --trials 40 --dim-max 5 --seed 3 --serial --out " + b.string()).code, 0);
  const std::string text = read_all(a);
  EXPECT_EQ(text, read_all(b));
  std::istringstream lines(text);
  std::string line;
  std::size_t count = 0;
  while (std::getline(lines, line)) {
    const Json j = Json::parse(line);
    if (count == 0) {
      EXPECT_TRUE(j.contains("header"));
      EXPECT_EQ(j["seed"], 3);
    } else {
      EXPECT_EQ(j["trial"], count - 1);
      EXPECT_EQ(j["violation"], false);
    }
    ++count;
  }
  EXPECT_EQ(count, 41u);
}

TEST(JsonIo, ParsesRationalsAndRejectsGarbage) {
  using namespace latfix;
  EXPECT_EQ(io::rational_from_json(Json("3/6")), Rational(1, 2));
  EXPECT_EQ(io::rational_from_json(Json(-4)), Rational(-4));
  EXPECT_THROW(io::rational_from_json(Json(0.5)), InvalidInput);
  const QMatrix m = io::matrix_from_json(Json::parse(R"({"rows": [["1/2", 0], [0, 1]]})"));
  EXPECT_EQ(m, (QMatrix{{Rational(1, 2), 0}, {0, 1}}));
  EXPECT_THROW(io::matrix_from_json(Json::parse(R"([[1, 2], [3]])")), InvalidInput);
  const PositiveMatrixOperator t = io::operator_from_json(
      Json::parse(R"({"matrix": [[1, 0], [0, 1]], "norm": {"weighted_one": ["1", "2"]}})"));
  EXPECT_EQ(t.norm(), NormTag::weighted_one({1, 2}));
  EXPECT_EQ(io::matrix_from_json(io::to_json(m)), m);
}
