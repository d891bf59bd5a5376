#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "../tools/report.hpp"
#include "doctest.h"
#include "seesaw/thetalift.hpp"

using namespace seesaw;
using report::Json;

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + SEESAW_CLI_PATH + std::string(" ") + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  Result r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

// Keys of every object, in output order, are sorted.
bool keys_sorted(const nlohmann::ordered_json& j) {
  if (j.is_object()) {
    std::string prev;
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first && !(prev < it.key())) return false;
      prev = it.key();
      first = false;
      if (!keys_sorted(it.value())) return false;
    }
  }
  if (j.is_array())
    for (const auto& e : j)
      if (!keys_sorted(e)) return false;
  return true;
}

// Every float sits in an object that also carries an error_bound.
bool floats_have_bounds(const Json& j) {
  if (j.is_object()) {
    bool has_bound = j.contains("error_bound");
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.value().is_number_float() && !has_bound) return false;
      if (!floats_have_bounds(it.value())) return false;
    }
  }
  if (j.is_array())
    for (const auto& e : j) {
      if (e.is_number_float()) return false;
      if (!floats_have_bounds(e)) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("dichotomy") {
  auto r = run("dichotomy --n 2 --m 3");
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["sigma"] == Json::array());
  CHECK(j["split"] == true);
  j = Json::parse(run("dichotomy --n 3 --m 2").out);
  CHECK(j["sigma"] == Json::array({"7", "inf"}));
  CHECK(j["definite"] == true);
}

TEST_CASE("qexp") {
  auto r = run("qexp --char can^2 --limit 10");
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["coefficients"] == Json::array({1, -3, 0, 5, 0, 0, -7, -3, 9, 0}));
  CHECK(j["level"] == 7);
}

TEST_CASE("csv coefficient dump round-trips") {
  auto r = run("qexp --char can^1 --limit 300 --format csv");
  CHECK(r.code == 0);
  auto a = report::read_coefficients(r.out);
  CHECK(a == qexp_from_ideals(canonical_char(1), 300).a);
  CHECK(report::coefficients_csv(a) == r.out);
}

TEST_CASE("verify pwp") {
  auto r = run("verify pwp --samples 100 --seed 1");
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["passed"] == 100);
  CHECK(j["compat_passed"] == 100);
}

TEST_CASE("char") {
  Json j = Json::parse(run("char --n 2 --alpha 1,1").out);
  // (1 + sqrt(-7))^2 = -6 + 2 sqrt(-7)
  CHECK(j["value"]["a"] == "-6");
  CHECK(j["value"]["b"] == "2");
  CHECK(j["level"] == 7);
}

TEST_CASE("report format contract") {
  for (const char* args : {"theta-eval --tau 0.1,0.5 --l 1", "rallis --l 0 --pmax 100000 --quad-depth 1",
                           "period --lmax 1", "dichotomy --n 2 --m 1", "verify pwp --samples 10"}) {
    auto r = run(args);
    CAPTURE(args);
    CHECK(r.code == 0);
    CHECK(keys_sorted(nlohmann::ordered_json::parse(r.out)));
    CHECK(floats_have_bounds(Json::parse(r.out)));
  }
  auto t = Json::parse(run("theta-eval --tau 0.1,0.5 --l 1").out);
  CHECK(t["difference"]["value"].get<double>() < 1e-12);
}

TEST_CASE("reproducible output") {
  auto a = run("rallis --l 1 --pmax 50000 --quad-depth 1", "SEESAW_THREADS=1");
  auto b = run("rallis --l 1 --pmax 50000 --quad-depth 1", "SEESAW_THREADS=3");
  CHECK(a.code == b.code);
  CHECK(a.out == b.out);
  CHECK(run("verify pwp --samples 20 --seed 7").out == run("verify pwp --samples 20 --seed 7").out);
}

TEST_CASE("exit codes, config file and output path") {
  CHECK(run("qexp --no-such-flag").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("rallis --l 9").code == 2);
  CHECK(run("theta-eval --tau 0,0.3 --radius 3").code == 1);
  CHECK(run("char --n 1 --alpha x,1").code == 2);

  const std::string cfg = "cli_test.ini", out = "cli_test_out.json";
  {
    std::ofstream f(cfg);
    f << "format=json\n[qexp]\nlimit=4\n";
  }
  Json j = Json::parse(run("--config " + cfg + " qexp").out);
  CHECK(j["coefficients"].size() == 4);
  j = Json::parse(run("--config " + cfg + " qexp --limit 6").out);
  CHECK(j["coefficients"].size() == 6);
  CHECK(run("qexp --limit 3 --output " + out).code == 0);
  std::ifstream f(out);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(Json::parse(ss.str())["coefficients"] == Json::array({1, -3, 0}));
  std::remove(cfg.c_str());
  std::remove(out.c_str());
}
