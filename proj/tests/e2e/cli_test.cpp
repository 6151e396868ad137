#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "kamcert/birkhoff.hpp"
#include "kamcert/pipeline.hpp"

namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code;
  std::string out;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("kamcert_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write_config(const std::string& name, const std::string& body) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << body << "certificate = " << (dir_ / "cert.txt").string()
                     << "\ncertificate_json = " << (dir_ / "cert.json").string()
                     << "\norbit_csv = " << (dir_ / "orbit.csv").string()
                     << "\ntorus_csv = " << (dir_ / "torus.csv").string() << "\n";
    return p;
  }

  CliResult run(const std::string& args) {
    const fs::path log = dir_ / "log.txt";
    const std::string cmd = std::string(KAMCERT_CLI) + " " + args + " > " + log.string() + " 2>&1";
    const int st = std::system(cmd.c_str());
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, slurp(log)};
  }

  static std::string slurp(const fs::path& p) {
    std::ifstream f(p);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }

  fs::path dir_;
};

// Small enough to run in a few seconds; the verdict is irrelevant.
const char* kSmall = "lambda = 0.4\nepsilon = 0.1\nN_O = 6000\nN_A = 40\nN_T = 2000\nN_F = 1024\nstrips = 2^-9\n";

TEST_F(Cli, LambdaOutsideUnitIntervalExitsTwo) {
  const auto r = run("--config " + write_config("bad.cfg", "lambda = 1.5\nepsilon = 0.1\n").string());
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("lambda must lie in (0, 1)"), std::string::npos) << r.out;
}

TEST_F(Cli, ConfigErrorsExitTwo) {
  EXPECT_EQ(run("--config " + (dir_ / "missing.cfg").string()).code, 2);
  EXPECT_EQ(run("--config " + write_config("u.cfg", "lambda = 0.4\nepsilon = 0.1\nspeed = 3\n").string()).code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("--config x --export pictures").code, 2);
  EXPECT_EQ(run("--config " + write_config("p.cfg", kSmall).string() + " --precision 32").code, 2);
}

TEST_F(Cli, TorusExportRoundTrip) {
  const auto r = run("--config " + write_config("s.cfg", kSmall).string() + " --export torus orbit");
  ASSERT_TRUE(r.code == 0 || r.code == 1) << r.out;
  std::ifstream f(dir_ / "torus.csv");
  const auto torus = kamcert::read_torus_csv(f, 128);
  f.clear();
  f.seekg(0);
  std::size_t x_rows = 0, y_rows = 0;
  std::string line;
  std::getline(f, line);
  while (std::getline(f, line)) (line[0] == 'x' ? x_rows : y_rows)++;
  EXPECT_EQ(x_rows, 2u * 40 - 1);
  EXPECT_EQ(y_rows, 2u * 40 - 1);

  // The same pipeline in process gives identical coefficients.
  const auto art = kamcert::run_pipeline(kamcert::load_config((dir_ / "s.cfg").string()));
  for (long k = -39; k <= 39; ++k) {
    EXPECT_EQ(torus.kx.coeff(k).re().lo(), art.torus.kx.coeff(k).re().lo()) << k;
    EXPECT_EQ(torus.kx.coeff(k).im().hi(), art.torus.kx.coeff(k).im().hi()) << k;
    EXPECT_EQ(torus.ky.coeff(k).re().lo(), art.torus.ky.coeff(k).re().lo()) << k;
    EXPECT_EQ(torus.ky.coeff(k).im().hi(), art.torus.ky.coeff(k).im().hi()) << k;
  }
  std::ifstream o(dir_ / "orbit.csv");
  std::size_t rows = 0;
  std::getline(o, line);
  while (std::getline(o, line)) ++rows;
  EXPECT_EQ(rows, 6000u);
  EXPECT_EQ(art.orbit.x.size(), 6000u);
}

TEST_F(Cli, CertificatesAreDeterministic) {
  const auto cfg = write_config("s.cfg", kSmall).string();
  const auto a = run("--config " + cfg + " --export certificate-json");
  ASSERT_TRUE(a.code == 0 || a.code == 1) << a.out;
  const std::string t1 = slurp(dir_ / "cert.txt"), j1 = slurp(dir_ / "cert.json");
  ASSERT_FALSE(t1.empty());
  EXPECT_NE(j1.find("\"quantities\""), std::string::npos);
  const auto b = run("--config " + cfg + " --export certificate-json");
  EXPECT_EQ(a.code, b.code);
  EXPECT_EQ(t1, slurp(dir_ / "cert.txt"));
  EXPECT_EQ(j1, slurp(dir_ / "cert.json"));
}

TEST_F(Cli, GoldenRowEpsilonPointOneProves) {
  const auto r = run("--config " +
                     write_config("e01.cfg", "lambda = 0.4\nepsilon = 0.1\nN_F = 2048\nstrips = 2^-9\n").string());
  EXPECT_EQ(r.code, 0) << r.out;
  const std::string cert = slurp(dir_ / "cert.txt");
  EXPECT_NE(cert.find("verdict proved"), std::string::npos);
  const auto pos = cert.find("\nT1 ");
  ASSERT_NE(pos, std::string::npos);
  std::istringstream is(cert.substr(pos + 4));
  std::string lo, hi;
  is >> lo >> hi;
  EXPECT_LT(std::stod(hi), 1.0);
}

}  // namespace
