#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "simdepth/cli.hpp"

using namespace simdepth;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

fs::path sample_file() {
  const fs::path p = fs::temp_directory_path() / "simdepth_cli_sample.csv";
  const Run s = run({"sample", "--k", "3", "--alpha", "1", "--n", "400", "--seed", "17"});
  REQUIRE(s.code == 0);
  std::ofstream(p) << s.out;
  return p;
}

double depth_value(const std::string& line) {
  const auto eq = line.find("= ");
  REQUIRE(eq != std::string::npos);
  return std::stod(line.substr(eq + 2));
}

}  // namespace

TEST_CASE("maxdepth prints the closed form") {
  const Run a = run({"maxdepth", "--k", "2", "--alpha", "0.7"});
  CHECK(a.code == 0);
  CHECK(a.out.rfind("0.5\n", 0) == 0);
  const Run b = run({"maxdepth", "--k", "3", "--alpha", "1"});
  CHECK(b.code == 0);
  CHECK(b.out.rfind("0.444444444444", 0) == 0);
  const Run c = run({"maxdepth", "--k", "3", "--alpha", "4"});
  CHECK(c.code == 0);
  CHECK(c.out.find("alpha > 1") != std::string::npos);
}

TEST_CASE("limit subcommand") {
  const Run a = run({"limit", "--alpha", "0.5"});
  CHECK(a.code == 0);
  CHECK(a.out.rfind("0.317310507863", 0) == 0);
}

TEST_CASE("depth of a corner is below the barycentre") {
  const auto p = sample_file();
  const Run corner = run({"depth", "--input", p.string(), "--theta", "0.9,0.05,0.05"});
  const Run mid = run({"depth", "--input", p.string(), "--theta", "0.3333333333333333,0.3333333333333333,0.3333333333333334"});
  REQUIRE(corner.code == 0);
  REQUIRE(mid.code == 0);
  CHECK(depth_value(corner.out) < depth_value(mid.out));
  CHECK(corner.out.find("method exact") != std::string::npos);
  const Run brute = run({"depth", "--input", p.string(), "--theta", "0.9,0.05,0.05", "--method", "brute"});
  REQUIRE(brute.code == 0);
  CHECK(depth_value(brute.out) == depth_value(corner.out));
  fs::remove(p);
}

TEST_CASE("input errors exit with 1") {
  CHECK(run({"maxdepth", "--k", "3", "--alpha", "1", "--bogus"}).code == 1);
  CHECK(run({}).code == 1);
  const auto p = sample_file();
  CHECK(run({"depth", "--input", p.string(), "--theta", "0.5,abc,0.5"}).code == 1);
  CHECK(run({"depth", "--input", p.string(), "--theta", "0.5,0.6,0.1"}).code == 1);
  CHECK(run({"depth", "--input", p.string(), "--theta", "0.5,0.5"}).code == 1);
  const Run approx = run({"depth", "--input", p.string(), "--theta", "0.2,0.3,0.5", "--method", "approx"});
  CHECK(approx.code == 1);
  CHECK(run({"depth", "--input", "/nonexistent/file.csv", "--theta", "0.2,0.3,0.5"}).code == 1);
  CHECK(run({"maxdepth", "--k", "1", "--alpha", "1"}).code == 1);
  CHECK(run({"maxdepth", "--k", "3", "--alpha", "-1"}).code == 1);
  fs::remove(p);
}

TEST_CASE("version and help") {
  const Run v = run({"--version"});
  CHECK(v.code == 0);
  CHECK(v.out.find("0.1.0") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("sampling and probing are reproducible") {
  const std::vector<std::string> s = {"sample", "--k", "4", "--alpha", "0.3", "--n", "50", "--seed", "8"};
  CHECK(run(s).out == run(s).out);
  const std::vector<std::string> probe = {"probe", "--alpha-w", "0.5", "--alpha-q", "0.5", "--a", "0.5,0.5",
                                          "--b", "1,0", "--n", "2000", "--seed", "3"};
  const Run p1 = run(probe);
  CHECK(p1.code == 0);
  CHECK(p1.out == run(probe).out);
}

TEST_CASE("experiment subcommands write files") {
  const fs::path dir = fs::temp_directory_path() / "simdepth_cli_fig3";
  fs::remove_all(dir);
  const Run r = run({"fig3", "--out", dir.string(), "--seed", "4", "--alphas", "0.5", "--ns", "100,200",
                     "--replicates", "3"});
  CHECK(r.code == 0);
  CHECK(fs::exists(dir / "fig3.csv"));
  CHECK(fs::exists(dir / "fig3.svg"));
  CHECK(run({"fig3", "--out", dir.string(), "--alphas", "0.5"}).code == 1);  // seed is required
  fs::remove_all(dir);
}
