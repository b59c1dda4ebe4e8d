#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("fpp_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  RunResult run(const std::string& args) const {
    const auto out = dir_ / "stdout.txt";
    const auto err = dir_ / "stderr.txt";
    const std::string cmd = std::string(FPP_BINARY) + " " + args + " > " + out.string() + " 2> " + err.string();
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, UnknownSubcommandIsUsageError) { EXPECT_EQ(run("no-such-command").code, 1); }

TEST_F(Cli, MissingSeedIsUsageError) { EXPECT_EQ(run("simulate-fpp --alpha 0.5").code, 1); }

TEST_F(Cli, MixtureWeightsMustSumToOne) {
  const auto r = run("simulate-mfpp --seed 1 --alpha1 0.5 --alpha2 0.9 --c1 0.5 --c2 0.6");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("C1+C2 must equal 1"), std::string::npos) << r.err;
}

TEST_F(Cli, MlEvalCsv) {
  const auto r = run("ml-eval --alpha 1 --z -1 0");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "z,E\n-1,0.36787944117144233\n0,1\n");
}

TEST_F(Cli, MomentsJson) {
  const auto r = run("moments --process fpp --alpha 1 --lambda 2 --t 3 --s 3 --format json");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"mean\": 6"), std::string::npos) << r.out;
}

TEST_F(Cli, SimulateFprfWritesThreeFiles) {
  const auto target = dir_ / "field.csv";
  const auto r = run("simulate-fprf --seed 5 --alpha1 0.8 --alpha2 0.7 --lambda 20 --delta 1e-3 --out " +
                     target.string());
  ASSERT_EQ(r.code, 0) << r.err;
  for (const char* name : {"field.csv", "field_path1.csv", "field_path2.csv"}) {
    ASSERT_TRUE(fs::exists(dir_ / name)) << name;
  }
  EXPECT_EQ(slurp(target).substr(0, 4), "x,y\n");
  EXPECT_EQ(slurp(dir_ / "field_path1.csv").substr(0, 4), "s,Y\n");
}

TEST_F(Cli, OutputDirectoryVariable) {
  const auto r = run("records --seed 3 --rate 2 --out rec.csv");
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string cmd = "FRACPOISSON_OUT_DIR=" + dir_.string() + " " + FPP_BINARY +
                          " records --seed 3 --rate 2 --out rec2.csv";
  ASSERT_EQ(std::system(cmd.c_str()), 0);
  EXPECT_TRUE(fs::exists(dir_ / "rec2.csv"));
  fs::remove("rec.csv");
}

TEST_F(Cli, FprfPmf) {
  const auto r = run("pmf --process fprf --seed 2 --alpha1 0.9 --alpha2 0.9 --lambda 1 --t1 1 --t2 1 --k-max 5 "
                     "--n-mc 200");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, 7), "k,p,se\n");
}

TEST_F(Cli, RerunsAreByteIdentical) {
  const std::string args = "simulate-fpp --seed 11 --alpha 0.6 --lambda 3 --t-end 20 --method timechange";
  const auto a = run(args);
  const auto b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_FALSE(a.out.empty());
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, run("simulate-fpp --seed 12 --alpha 0.6 --lambda 3 --t-end 20 --method timechange").out);
}

TEST_F(Cli, DomainErrorExitsOne) {
  const auto r = run("pmf --process fpp --alpha 1.5");
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(r.err.empty());
}

TEST_F(Cli, ValidateQuickSuite) {
  const auto r = run("validate --seed 1 --suite 1,8");
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.err.find("1 special functions pass"), std::string::npos);
  EXPECT_NE(r.err.find("8 governing equations pass"), std::string::npos);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_TRUE(j["results"].is_array());
  for (const auto& e : j["results"]) {
    EXPECT_TRUE(e["pass"].get<bool>()) << e.dump();
    EXPECT_EQ(e["seed"], 1);
  }
  const auto csv = run("validate --seed 1 --suite 1 --format csv");
  EXPECT_EQ(csv.out.substr(0, 29), "criterion,title,pass,checks\n1");
}
