#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "wgorder/cli.hpp"
#include "wgorder/config.hpp"
#include "wgorder/reproduce.hpp"

using namespace wgorder;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "wgorder_cli_tests" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string write(const fs::path& p, const std::string& content) {
  std::ofstream(p, std::ios::binary) << content;
  return p.string();
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("help documents exit codes") {
  const auto r = run({"--help"});
  CHECK(r.code == kExitHolds);
  CHECK(contains(r.out, "Exit codes"));
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
}

TEST_CASE("check command exit codes") {
  const auto dir = scratch("check");
  const auto [x32, y32] = ce32_pair();
  const auto a = write(dir / "a.json", to_json(x32).dump(2));
  const auto b = write(dir / "b.json", to_json(y32).dump(2));

  CHECK(run({"check", "st", a, a}).code == kExitHolds);
  CHECK(run({"check", "hr", a, b}).code == kExitHolds);
  const auto lr = run({"check", "lr", a, b, "--grid-points", "2000"});
  CHECK(lr.code == kExitFails);
  CHECK(contains(lr.out, "witness"));
  CHECK(run({"check", "hr", b, a}).code == kExitFails);
  CHECK(run({"check", "xx", a, b}).code == kExitUsage);
  CHECK(run({"check", "st", a, b, "--y-min", "0.9", "--y-max", "0.1"}).code == kExitUsage);

  const auto deep = run({"check", "lr", a, b, "--y-min", "1e-300", "--grid-points", "3"});
  CHECK(deep.code == kExitInconclusive);
}

TEST_CASE("configuration errors are exit 3 with a location") {
  const auto dir = scratch("config");
  const auto [x, y] = ce32_pair();
  const auto good = write(dir / "good.json", to_json(x).dump(2));

  const auto missing = run({"check", "st", (dir / "nope.json").string(), good});
  CHECK(missing.code == kExitConfig);
  CHECK(contains(missing.err, "nope.json"));

  const auto broken = write(dir / "broken.json", "{\n  \"units\": [\n    {\"alpha\": 1,,}\n  ]\n}\n");
  const auto r = run({"check", "st", broken, good});
  CHECK(r.code == kExitConfig);
  CHECK(contains(r.err, "broken.json:3:"));

  auto j = to_json(x);
  j["units"][1]["alpha"] = -1.0;
  const auto bad_field = write(dir / "field.json", j.dump());
  const auto f = run({"check", "st", bad_field, good});
  CHECK(f.code == kExitConfig);
  CHECK(contains(f.err, "units[1].alpha"));

  // Incompatible regimes.
  const auto cop = write(dir / "cop.json", to_json(y.with_generator(ArchimedeanGenerator::clayton(1.0))).dump());
  CHECK(run({"check", "st", good, cop}).code == kExitConfig);
}

TEST_CASE("sample command") {
  const auto dir = scratch("sample");
  const auto [x, y] = ce31_outlier_pair();
  const auto cfg = write(dir / "sys.json", to_json(x.with_shocks({0.9, 0.8, 0.95})).dump());

  CHECK(run({"sample", cfg, "--count", "0"}).code == kExitUsage);
  const auto r = run({"sample", cfg, "--count", "50", "--seed", "3"});
  CHECK(r.code == kExitHolds);
  CHECK(contains(r.out, "# seed 3\n"));
  CHECK(contains(r.out, "spec_hash"));
  CHECK(contains(r.out, "index,value,atom"));
  CHECK(run({"sample", cfg, "--count", "50", "--seed", "3"}).out == r.out);
  CHECK(run({"sample", cfg, "--count", "50", "--seed", "4"}).out != r.out);

  CHECK(run({"sample", cfg, "--count", "20", "--out", (dir / "draws.csv").string()}).code == kExitHolds);
  CHECK(fs::exists(dir / "draws.csv"));
  CHECK(run({"sample", cfg, "--count", "20", "--out", (dir / "no" / "such" / "draws.csv").string()}).code == kExitIo);
}

TEST_CASE("verify command") {
  CHECK(run({"verify", "t3.1", "--trials", "100", "--seed", "42"}).code == kExitHolds);
  CHECK(run({"verify", "t3.6", "--trials", "50", "--copula1", "clayton:2", "--copula2", "clayton:2"}).code ==
        kExitHolds);
  CHECK(run({"verify", "t3.6", "--trials", "5", "--copula1", "clayton:0.25", "--copula2", "gumbel:2.85"}).code ==
        kExitGeneration);
  CHECK(run({"verify", "t3.6", "--copula1", "clayton:x"}).code == kExitUsage);
  CHECK(run({"verify", "t9.9"}).code != kExitHolds);

  const auto dir = scratch("verify");
  const auto p1 = dir / "a.json", p2 = dir / "b.json";
  CHECK(run({"verify", "t3.5", "--trials", "10", "--seed", "5", "--out", p1.string()}).code == kExitHolds);
  CHECK(run({"verify", "t3.5", "--trials", "10", "--seed", "5", "--out", p2.string()}).code == kExitHolds);
  CHECK(slurp(p1) == slurp(p2));
  const auto report = Json::parse(slurp(p1));
  CHECK(report.contains("seed"));
}

TEST_CASE("reproduce writes identical files on rerun") {
  const auto d1 = scratch("repro1"), d2 = scratch("repro2");
  const auto r1 = run({"reproduce", "ce-3.1", "--out", d1.string()});
  const auto r2 = run({"reproduce", "ce-3.1", "--out", d2.string()});
  CHECK(r1.code == kExitHolds);
  CHECK(r2.code == kExitHolds);
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(d1)) {
    ++files;
    CHECK(slurp(e.path()) == slurp(d2 / e.path().filename()));
  }
  CHECK(files == 6);
  const auto summary = slurp(d1 / "ce-3.1_summary.txt");
  CHECK(contains(summary, "fig2a"));
  CHECK(contains(slurp(d1 / "ce-3.1_fig1a.csv"), "y,x,value"));

  const auto d3 = scratch("repro3");
  CHECK(run({"reproduce", "ce-3.2", "--out", d3.string()}).code == kExitHolds);
  CHECK(contains(slurp(d3 / "ce-3.2_summary.txt"), "non-monotone"));

  CHECK(run({"reproduce", "ce-9.9", "--out", d3.string()}).code != kExitHolds);
  CHECK(run({"reproduce", "ce-3.1", "--out", "/proc/wgorder-cannot-write"}).code == kExitIo);
}

TEST_CASE("check-majorize") {
  CHECK(run({"check-majorize", "4", "1", "1", "--", "3", "1.5", "1.5"}).code == kExitHolds);
  CHECK(run({"check-majorize", "3", "1.5", "1.5", "--", "4", "1", "1"}).code == kExitFails);
  CHECK(run({"check-majorize", "4", "1", "1"}).code == kExitUsage);
  CHECK(run({"check-majorize", "4", "x", "--", "1", "1"}).code == kExitUsage);
  CHECK(run({"check-majorize", "1", "2", "--", "1", "1", "1"}).code != kExitHolds);
}
