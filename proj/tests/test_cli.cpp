#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli_app.hpp"

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  std::vector<const char*> argv;
  argv.push_back("adsvol");
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = adsvol::cli::run(int(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = std::string("cli_test_") + name;
  std::ofstream f(path);
  f << content;
  return path;
}

const char* kGoodSurface = R"({"genus": 2, "lengths": [1, 1, 1], "twists": [0, 0, 0]})";

}  // namespace

TEST_CASE("surface: pass, schema error, degenerate length") {
  std::string good = write_temp("good.json", kGoodSurface);
  CliResult r = run_cli({"surface", "--input", good});
  CHECK(r.code == 0);
  CHECK(r.out.find("pass") != std::string::npos);

  std::string zero =
      write_temp("zero.json", R"({"genus": 2, "lengths": [0, 1, 1], "twists": [0, 0, 0]})");
  CHECK(run_cli({"surface", "--input", zero}).code == 2);

  std::string unknown = write_temp(
      "unknown.json", R"({"genus": 2, "lengths": [1,1,1], "twists": [0,0,0], "extra": 1})");
  CHECK(run_cli({"surface", "--input", unknown}).code == 2);

  std::string tiny =
      write_temp("tiny.json", R"({"genus": 2, "lengths": [1e-5, 1, 1], "twists": [0, 0, 0]})");
  CHECK(run_cli({"surface", "--input", tiny}).code == 3);

  CHECK(run_cli({"surface", "--input", "no_such_file.json"}).code == 2);
}

TEST_CASE("json reports carry version and stable fields") {
  std::string good = write_temp("good.json", kGoodSurface);
  CliResult r = run_cli({"riera", "--input", good, "--edge", "0", "--radius", "2", "--json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["version"] == "0.1.0");
  CHECK(j["kind"] == "wp_gradient_lower_bound");
  CHECK(j["base_term"].get<double>() == doctest::Approx(0.6366197723675862).epsilon(1e-12));
  CHECK(j["lower_bound"].get<double>() == doctest::Approx(0.6476128408520672).epsilon(1e-12));
  CHECK(j.contains("mainestimate_ratio"));
}

TEST_CASE("byte-identical output for identical invocations") {
  std::string good = write_temp("good.json", kGoodSurface);
  std::vector<std::string> args = {"riera", "--input", good, "--edge", "1",
                                   "--radius", "3", "--json", "--seed", "7"};
  CliResult r1 = run_cli(args);
  CliResult r2 = run_cli(args);
  CHECK(r1.code == 0);
  CHECK(r1.out == r2.out);
}

TEST_CASE("length and intersect") {
  std::string good = write_temp("good.json", kGoodSurface);
  CliResult r = run_cli({"length", "--input", good, "--word", "abAB", "--json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["value"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));

  CliResult ri = run_cli({"intersect", "--input", good, "--word1", "a", "--word2", "b",
                          "--radius", "4", "--json"});
  auto ji = nlohmann::json::parse(ri.out);
  CHECK(ji["count_lower_bound"] == 1);
  CHECK(ji["certified_exact"] == true);

  // trivial word: input error
  CHECK(run_cli({"length", "--input", good, "--word", "aA"}).code == 2);
}

TEST_CASE("twist emits a surface description consumable by surface") {
  std::string good = write_temp("good.json", kGoodSurface);
  CliResult r = run_cli({"twist", "--input", good, "--weights", "1,0,0.5", "--direction", "left"});
  CHECK(r.code == 0);
  std::string twisted = write_temp("twisted.json", r.out);
  CHECK(run_cli({"surface", "--input", twisted}).code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["twists"][0].get<double>() == 1.0);
  CHECK(j["twists"][2].get<double>() == 0.5);
}

TEST_CASE("ratio between a surface and its twist image") {
  std::string good = write_temp("good.json", kGoodSurface);
  std::string twisted = write_temp(
      "twisted2.json", R"({"genus": 2, "lengths": [1, 1, 1], "twists": [3, 0, 0]})");
  CliResult same = run_cli({"ratio", "--input", good, "--input2", good, "--max-length", "3",
                            "--json"});
  CHECK(same.code == 0);
  CHECK(nlohmann::json::parse(same.out)["value"].get<double>() ==
        doctest::Approx(1.0).epsilon(1e-12));
  CliResult moved = run_cli({"ratio", "--input", good, "--input2", twisted, "--max-length", "3",
                             "--json"});
  CHECK(nlohmann::json::parse(moved.out)["value"].get<double>() > 1.0);
}

TEST_CASE("riera on a non-simple class exits 3") {
  std::string good = write_temp("good.json", kGoodSurface);
  CliResult r = run_cli({"riera", "--input", good, "--word", "aabb", "--radius", "4"});
  CHECK(r.code == 3);
  CHECK(r.err.find("NotSimple") != std::string::npos);
}

TEST_CASE("budget exhaustion exits 4") {
  std::string good = write_temp("good.json", kGoodSurface);
  CliResult r = run_cli({"riera", "--input", good, "--edge", "0", "--radius", "8",
                         "--budget", "1000"});
  CHECK(r.code == 4);
}

TEST_CASE("bounds evaluators") {
  CliResult r = run_cli({"bounds", "--op", "fuchsian-volume", "--genus", "2", "--json"});
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["value"].get<double>() == doctest::Approx(19.739208802178716).epsilon(1e-14));

  CliResult rc = run_cli({"bounds", "--op", "collar-width", "--x", "1", "--json"});
  CHECK(nlohmann::json::parse(rc.out)["value"].get<double>() ==
        doctest::Approx(1.4068291137472953).epsilon(1e-14));

  CliResult rd = run_cli({"bounds", "--op", "densities", "--matrix", "1,0,0,-1", "--json"});
  auto jd = nlohmann::json::parse(rd.out);
  CHECK(jd["orientation_preserving"] == false);

  CHECK(run_cli({"bounds", "--op", "no-such-op"}).code == 2);
}

TEST_CASE("reproduce prop52: lambda column constant 1.0") {
  CliResult r = run_cli({"reproduce", "prop52", "--n-max", "6", "--mu", "2", "--json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["rows"].size() == 6);
  for (const auto& row : j["rows"]) {
    CHECK(row["lambda_length"].get<double>() == 1.0);
  }
  CliResult rcsv = run_cli({"reproduce", "prop52", "--n-max", "3", "--csv"});
  CHECK(rcsv.out.rfind("n,alpha_length,lambda_length,", 0) == 0);
}

TEST_CASE("reproduce genus-optimality prints the optimized constant") {
  CliResult r = run_cli({"reproduce", "genus-optimality", "--json"});
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["c0"].get<double>() == doctest::Approx(1.30).epsilon(0.01));
}

TEST_CASE("sweep: deterministic CSV over a twist grid") {
  std::string cfg = write_temp("sweep.json", R"({
    "op": "riera",
    "surface": {"genus": 2, "lengths": [1, 1, 1], "twists": [0, 0, 0]},
    "curve": "b",
    "radius": 2,
    "vary": {"param": "length0", "values": [1.0, 0.5, 0.25]}
  })");
  CliResult r1 = run_cli({"sweep", "--config", cfg, "--threads", "1"});
  CliResult r4 = run_cli({"sweep", "--config", cfg, "--threads", "4"});
  CHECK(r1.code == 0);
  CHECK(r1.out == r4.out);  // deterministic regardless of thread count
  CHECK(r1.out.rfind("length0,curve_length,lower_bound,mainestimate_ratio", 0) == 0);
  int lines = 0;
  for (char ch : r1.out) lines += ch == '\n';
  CHECK(lines == 4);
}

TEST_CASE("help exits 0") {
  CHECK(run_cli({"--help"}).code == 0);
}
