#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + PARABI_CLI + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int st = pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) v.push_back(l);
  return v;
}

const std::string kSmall = "--case p0 -j 2 -a -4 -b 0 --alpha 1/2";

}  // namespace

TEST(CliTable, RowsDegreesAndLeadingColumn) {
  const auto r = run("table " + kSmall + " --format csv");
  ASSERT_EQ(r.status, 0);
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 7u);
  EXPECT_EQ(ls[0].rfind("n,degree,leading", 0), 0u);
  for (std::size_t i = 1; i < ls.size(); ++i) {
    std::istringstream row(ls[i]);
    std::string n, deg, lead;
    std::getline(row, n, ',');
    std::getline(row, deg, ',');
    std::getline(row, lead, ',');
    EXPECT_EQ(std::stoi(deg), static_cast<int>(i - 1));
    EXPECT_EQ(lead, "1");
  }
}

TEST(CliTable, JsonHoldsExactStrings) {
  const auto r = run("table " + kSmall + " --format json");
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("\"-9/16\""), std::string::npos);
}

TEST(CliSpectral, WeightSumLineAndGrid) {
  const auto r = run("spectral " + kSmall);
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("alpha=1/2, even_sum=1/2, odd_sum=1/2"), std::string::npos);
  const auto j = run("spectral " + kSmall + " --format json");
  for (const char* x : {"\"5/4\"", "\"-3/4\"", "\"-5/4\"", "\"3/4\"", "\"1/4\""}) EXPECT_NE(j.out.find(x), std::string::npos) << x;
  EXPECT_LT(j.out.find("\"5/4\""), j.out.find("\"-3/4\""));
}

TEST(CliSpectral, CsvHasOneRowPerPoint) {
  const auto r = run("spectral " + kSmall + " --format csv");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(lines(r.out).size(), 1u + 5u);
}

TEST(CliSpectral, InadmissibleStillEmitsGrid) {
  const auto r = run("spectral --case p0 -j 2 -a 2 -b 0 --alpha 1/2 --format json");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("\"admissible\": false"), std::string::npos);
  EXPECT_NE(r.out.find("\"grid\""), std::string::npos);
}

TEST(CliVerify, AdmissibleInstancePasses) {
  const auto r = run("verify " + kSmall);
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  EXPECT_NE(r.out.find("persymmetry"), std::string::npos);
}

TEST(CliVerify, PersymmetryOnlyAtHalf) {
  const auto r = run("verify --case p0 -j 4 -a -6 -b 1/2 --alpha 1/3");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out.find("persymmetry"), std::string::npos);
}

TEST(CliVerify, CorruptedCoefficientFails) {
  for (const char* c : {"A:0", "C:2", "A:4", "C:4"}) {
    const auto r = run("verify " + kSmall + " --corrupt " + c);
    EXPECT_EQ(r.status, 1) << c;
    EXPECT_NE(r.out.find("FAIL"), std::string::npos) << c;
  }
}

TEST(CliDiagram, LabelsMatchSpacings) {
  const auto r = run("diagram --case p0 -j 2 -a -5 -b 1/2 --alpha 1/2");
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("gap 3/4 (d3)"), std::string::npos);
  EXPECT_NE(r.out.find("gap 1/4 (d4)"), std::string::npos);
  const auto eq = run("diagram --case p0 -j 4 -a -8 -b 0 --alpha 1/2");
  EXPECT_EQ(eq.out.find("(d4)"), std::string::npos);
  EXPECT_NE(eq.out.find("gap 1/2 (d3)"), std::string::npos);
  const auto one = run("diagram --case p0 -j 4 -a -5 -b 0 --alpha 1/2");
  for (const auto& l : lines(one.out))
    if (l.find(" gap ") != std::string::npos) { EXPECT_NE(l.find("gap 1/2 (d)"), std::string::npos) << l; }
}

TEST(CliDiagram, SvgIsDeterministic) {
  const std::string args = "diagram --case p0 -j 2 -a -5 -b 1/2 --alpha 1/2 --svg";
  const auto a = run(args), b = run(args);
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.rfind("<svg", 0), 0u);
  EXPECT_NE(a.out.find("d3=3/4"), std::string::npos);
}

TEST(CliLimit, CsvColumnsAndRatio) {
  const auto r = run("limit --case p1 -j 2 -a -4 -b 0 --alpha 1/2 --eps 1e-3 1e-4 --format csv");
  ASSERT_EQ(r.status, 0);
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 3u);
  EXPECT_EQ(ls[0], "epsilon,max_dev_diag,max_dev_offdiag,max_imag");
  const auto t = run("limit --case p1 -j 2 -a -4 -b 0 --alpha 1/2 --eps 1e-3 1e-4");
  EXPECT_NE(t.out.find("ratio="), std::string::npos);
}

TEST(CliLimit, EmptyEpsilonListIsRejected) {
  EXPECT_NE(run("limit --case p1 -j 2 -a -4 -b 0 --alpha 1/2 --eps").status, 0);
  EXPECT_NE(run("limit --case p1 -j 2 -a -4 -b 0 --alpha 1/2").status, 0);
}

TEST(CliErrors, InvalidParametersGiveNonzeroExit) {
  EXPECT_EQ(run("table --case p0 -j 3").status, 2);
  EXPECT_EQ(run("table --case p0 -j 2 --alpha 3/2").status, 2);
  EXPECT_EQ(run("table --case p0 -j 2 -a 1/0").status, 2);
  EXPECT_EQ(run("table --case p7").status, 2);
  EXPECT_NE(run("").status, 0);
}

TEST(CliOutput, EnvironmentDirectoryAndDeterminism) {
  const auto dir = std::filesystem::temp_directory_path() / "parabi_cli_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  const auto r = run("spectral " + kSmall + " --format json", "PARABI_OUTPUT_DIR=" + dir.string());
  ASSERT_EQ(r.status, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(dir / "spectral.json");
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), run("spectral " + kSmall + " --format json").out);
  std::filesystem::remove_all(dir);
}
