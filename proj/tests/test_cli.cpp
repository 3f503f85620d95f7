#include <doctest.h>

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "support.hpp"
#include "tilezeta/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "tilezeta");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = tilezeta::cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run({"validate", system_path("example31")}).code == 0);
  auto bad = run({"validate", system_path("invalid/bad_sum")});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("weight-sum") != std::string::npos);
  CHECK(run({"validate", "/nonexistent.json"}).code == 1);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"zeta", "eval", system_path("omega2")}).code == 2);
  CHECK(run({"tile", system_path("omega2"), "--phase", "sideways"}).code == 2);
  CHECK(run({"zeta", "rational", system_path("example31")}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("iterate shows the 1/81 entry of example31") {
  auto r = run({"iterate", system_path("example31"), "--color", "+", "--n", "2"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("\n4\t+\t1/81\n") != std::string::npos);
}

TEST_CASE("zeta eval in json") {
  auto r = run({"--format", "json", "zeta", "eval", system_path("example31"), "--alpha", "3"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  double w = std::pow(4.0 / 9, 3), v = std::pow(1.0 / 81, 3);
  double expected = 1 / ((1 - 2 * w) * (1 - 2 * w) - v);
  CHECK(std::fabs(j["value"][0].get<double>() - expected) < 1e-12 * expected);
}

TEST_CASE("output is reproducible") {
  auto a = run({"tile", system_path("example31"), "--phase", "sample", "--seed", "7"});
  auto b = run({"tile", system_path("example31"), "--phase", "sample", "--seed", "7"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("<svg") != std::string::npos);
}

TEST_CASE("solenoid commands") {
  auto r = run({"solenoid", "add", "(0)1.101e0", "(0)0.1e0"});
  REQUIRE(r.code == 0);
  CHECK(r.out == "(0)1.011e0\n");
  CHECK(run({"solenoid", "embed", "1/3"}).code == 1);
  CHECK(run({"solenoid", "negate", "garbage"}).code == 1);
  CHECK(run({"solenoid", "add", "(0)1.1e0"}).code == 2);
}

TEST_CASE("remaining commands run on every bundled system") {
  for (const char* name : {"example31", "omega2", "thue_morse", "fibonacci", "example35_p13"}) {
    CAPTURE(name);
    std::string f = system_path(name);
    CHECK(run({"base-group", f}).code == 0);
    CHECK(run({"g-function", f}).code == 0);
    CHECK(run({"canonicalize", f}).code == 0);
    CHECK(run({"orbits", f, "--max-len", "6"}).code == 0);
    CHECK(run({"separating", f}).code == 0);
    CHECK(run({"zeta", "poles", f}).code == 0);
    CHECK(run({"zeta", "oracle", f, "--alpha", "3", "--max-len", "10"}).code == 0);
    CHECK(run({"--format", "json", "natural-weights", f}).code == 0);
  }
}
