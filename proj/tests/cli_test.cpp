#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "efpm/cli.hpp"
#include "efpm/dataset.hpp"
#include "svg_check.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = efpm::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(EFPM_FIXTURE_DIR) + "/" + name; }

std::string read(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string golden(const std::string& name) {
  return read(fs::path(EFPM_GOLDEN_DIR) / name);
}

class CliTest : public ::testing::Test {
protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("efpm_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p, std::ios::binary) << text;
    return p;
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, FitPrintsPublishedCoefficients) {
  const auto r = run({"fit", "--x", "cilf"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("130.327"), std::string::npos);
  EXPECT_NE(r.out.find("15.902"), std::string::npos);
  EXPECT_EQ(r.out, golden("fit_cilf.txt"));
  EXPECT_TRUE(r.err.empty());
}

TEST_F(CliTest, FitFromCsv) {
  const auto r = run({"fit", "--x", "ceieoeq", "--dataset", fixture("small.csv")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("Predictors: (Constant), CEIEOEQ"), std::string::npos);

  const auto bad = write("bad.csv", "project,fp,cilf,cilfeif,ceieoeq\n1,x,1,1,1\n");
  const auto rb = run({"fit", "--x", "cilf", "--dataset", bad.string()});
  EXPECT_EQ(rb.code, 1);
  EXPECT_NE(rb.err.find(bad.string() + ":2:3:"), std::string::npos) << rb.err;
  EXPECT_TRUE(rb.out.empty());

  const auto flat = write("flat.csv", "project,fp,cilf,cilfeif,ceieoeq\n1,1,2,2,1\n1,2,2,2,1\n2,3,2,2,1\n");
  const auto rf = run({"fit", "--x", "cilf", "--dataset", flat.string()});
  EXPECT_EQ(rf.code, 1);
  EXPECT_NE(rf.err.find("constant"), std::string::npos);
}

TEST_F(CliTest, EstimateIntercept) {
  const auto r = run({"estimate", "--cilf", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "model\tcounter\tpredicted_fp\tr2\nCILF\t0\t130.327\t0.718\nbest\tCILF\n");
}

TEST_F(CliTest, EstimateAllCountersWithInterval) {
  const auto r = run({"estimate", "--cilf", "10", "--cilfeif", "15", "--ceieoeq", "40",
                      "--interval", "0.95"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "model\tcounter\tpredicted_fp\tr2\tlevel\tlow\thigh");
  EXPECT_NE(r.out.find("\nCEIEOEQ\t40\t302.344\t0.869\t0.95\t"), std::string::npos) << r.out;
  EXPECT_LT(r.out.find("\nCEIEOEQ"), r.out.find("\nCILF\t"));
  EXPECT_LT(r.out.find("\nCILF\t"), r.out.find("\nCILFEIF\t"));
  EXPECT_NE(r.out.find("best\tCEIEOEQ\n"), std::string::npos);
}

TEST_F(CliTest, EstimateWithFittedModels) {
  const auto r = run({"estimate", "--ceieoeq", "20", "--models", "fit:" + fixture("small.csv")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("CEIEOEQ\t20\t"), std::string::npos);
  EXPECT_EQ(r.out.find("302.344"), std::string::npos);
}

TEST_F(CliTest, EstimateFailures) {
  const auto none = run({"estimate"});
  EXPECT_EQ(none.code, 1);
  EXPECT_FALSE(none.err.empty());
  const auto inverted = run({"estimate", "--cilf", "5", "--cilfeif", "2"});
  EXPECT_EQ(inverted.code, 1);
  EXPECT_NE(inverted.err.find("cilfeif < cilf"), std::string::npos);
  EXPECT_EQ(run({"estimate", "--cilf", "1", "--interval", "1.5"}).code, 1);
  EXPECT_EQ(run({"estimate", "--cilf", "1", "--models", "magic"}).code, 2);
  EXPECT_EQ(run({"estimate", "--cilf", "abc"}).code, 2);
  EXPECT_EQ(run({"estimate", "--cilf", "1", "--models", "fit:/nonexistent.csv"}).code, 1);
}

TEST_F(CliTest, CountFixture) {
  const auto r = run({"count", fixture("billing.fps")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, golden("count_billing.txt"));
}

TEST_F(CliTest, CountWithoutHeaderNamesLineOne) {
  const auto r = run({"count", fixture("broken.fps")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("broken.fps:1:1: missing project header"), std::string::npos) << r.err;
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(run({"count", (dir_ / "absent.fps").string()}).code, 1);
}

TEST_F(CliTest, DatasetExport) {
  const auto r = run({"dataset", "export"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, efpm::save_csv(efpm::embedded_dataset()));
  EXPECT_EQ(run({"dataset"}).code, 2);
  EXPECT_EQ(run({"dataset", "import"}).code, 2);
}

TEST_F(CliTest, Consistency) {
  const auto r = run({"consistency"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\n9\t216.0\t227.0\t0.04966\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("\nmean_rel_diff\t0.13791\n"), std::string::npos);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 32);

  const auto small = run({"consistency", "--dataset", fixture("small.csv")});
  EXPECT_EQ(small.code, 0);
  EXPECT_NE(small.out.find("\n1\t100.0\t110.0\t0.09524\n"), std::string::npos) << small.out;

  const auto odd = write("odd.csv", "project,fp,cilf,cilfeif,ceieoeq\n1,1,1,1,1\n");
  const auto ro = run({"consistency", "--dataset", odd.string()});
  EXPECT_EQ(ro.code, 1);
  EXPECT_NE(ro.err.find("project 1"), std::string::npos);
}

TEST_F(CliTest, PlotWritesSvgAndTable) {
  const fs::path out = dir_ / "fig.svg";
  const fs::path table = dir_ / "fig.tsv";
  const auto r = run({"plot", "--x", "ceieoeq", "--out", out.string(), "--table", table.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto s = svg::inspect(read(out));
  EXPECT_EQ(s.points.size(), 60u);
  EXPECT_NE(read(out).find("<title>Regression line FP - CEIEOEQ</title>"), std::string::npos);
  EXPECT_EQ(read(table).rfind("x\ty\tfitted\tresidual\n", 0), 0u);

  EXPECT_EQ(run({"plot", "--x", "cilf"}).code, 2);
  EXPECT_EQ(run({"plot", "--x", "cilf", "--out", (dir_ / "no/such/dir.svg").string()}).code, 1);
}

TEST_F(CliTest, UsageErrors) {
  const auto unknown = run({"frobnicate"});
  EXPECT_EQ(unknown.code, 2);
  EXPECT_NE(unknown.err.find("Usage"), std::string::npos);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"fit", "--x", "fp"}).code, 2);
  EXPECT_EQ(run({"fit"}).code, 2);
  EXPECT_EQ(run({"fit", "--x", "cilf", "--bogus"}).code, 2);
  const auto help = run({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("estimate"), std::string::npos);
}
