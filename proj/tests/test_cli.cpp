#include "gitstab/cli.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace gitstab;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  auto dir = std::filesystem::temp_directory_path() / "gitstab_cli_tests";
  std::filesystem::create_directories(dir);
  auto path = dir / name;
  std::ofstream(path) << text;
  return path.string();
}

const char* kB1B1 = R"({
  "version": "gitstab/1",
  "dec_type": {"r": 2, "components": [{"a": 2, "b": 1, "c": 0}]},
  "tensor": [{"component": 1, "copy": 1, "index": [1, 1], "coeff": "1"}],
  "lambdas": [[0, 0], [1, -1]]
})";

}  // namespace

TEST_CASE("cli mu with the zero cocharacter") {
  auto r = run({"mu", write_temp("b1b1.json", kB1B1)});
  REQUIRE(r.code == 0);
  auto doc = json::parse(r.out);
  CHECK(doc["results"][0]["mu"] == 0);
  CHECK(doc["results"][1]["mu"] == 2);
}

TEST_CASE("cli kempf on b1 (x) b1") {
  auto path = write_temp("b1b1.json", kB1B1);
  auto r = run({"kempf", path, "--brute-box", "3"});
  REQUIRE(r.code == 0);
  auto doc = json::parse(r.out);
  CHECK(doc["result"]["verdict"] == "unstable");
  CHECK(doc["result"]["lambda_star"] == json::array({-1, 1}));
  CHECK(doc["result"]["q"] == -2);
  CHECK(doc["result"]["m0_sq"] == "2");
  CHECK(doc["brute_force"]["agrees"] == true);

  auto s1 = run({"kempf", path, "--restarts", "3", "--seed", "7"});
  auto s2 = run({"kempf", path, "--restarts", "3", "--seed", "7"});
  CHECK(s1.code == 0);
  CHECK(s1.out == s2.out);
}

TEST_CASE("cli char and flag") {
  auto path = write_temp("b1b1.json", kB1B1);
  auto c = run({"char", path});
  REQUIRE(c.code == 0);
  auto doc = json::parse(c.out);
  CHECK(doc["results"][0]["chi_star"].is_null());
  CHECK(doc["results"][1]["chi_star"].is_null());  // mu = 2 >= 0

  auto f = run({"flag", path});
  REQUIRE(f.code == 0);
  auto fd = json::parse(f.out);
  CHECK(fd["results"][1]["flag"]["dims"] == json::array({1}));
  CHECK(fd["results"][1]["flag"]["alphas"] == json::array({"1"}));
  CHECK(fd["results"][1]["permutation"] == json::array({2, 1}));
}

TEST_CASE("cli check chain on the SO(2) example") {
  auto dir = (std::filesystem::temp_directory_path() / "gitstab_cli_examples").string();
  REQUIRE(run({"examples", "--out", dir}).code == 0);
  auto r = run({"check", dir + "/orthogonal_r2_hyperbolic.json", "--mode", "chain"});
  REQUIRE(r.code == 0);
  auto doc = json::parse(r.out);
  CHECK(doc["chain"]["monotone"] == true);
  CHECK(doc["chain"]["semistable"] == true);
  CHECK(doc["chain"]["stable"] == false);
  for (const char* mode : {"decorated", "honest", "slope"}) {
    auto m = run({"check", dir + "/orthogonal_r2_hyperbolic.json", "--mode", mode});
    CHECK(m.code == 0);
    CHECK(json::parse(m.out)["verdict"]["status"] == "semistable_only");
  }
}

TEST_CASE("cli homogenize") {
  auto path = write_temp("inhom.json", R"({
    "version": "gitstab/1",
    "dec_type": {"r": 2, "components": [{"a": 1, "b": 1, "c": 0}, {"a": 2, "b": 1, "c": 0}]},
    "tensor": [{"component": 1, "index": [1], "coeff": 1},
               {"component": 2, "index": [2, 2], "coeff": "3/2"}],
    "flags": [{"dims": [1], "alphas": ["1"]}]
  })");
  auto r = run({"homogenize", path});
  REQUIRE(r.code == 0);
  auto doc = json::parse(r.out);
  CHECK(doc["plan"]["omega"] == 2);
  CHECK(doc["flags"][0]["nu"] == "1");
  CHECK(doc["flags"][0]["nu_explicit"] == "1");
  CHECK(doc["flags"][0]["agree"] == true);
  CHECK(doc["saturation"]["ok"] == true);
  auto k = run({"homogenize", path, "--k", "2"});
  CHECK(json::parse(k.out)["flags"][0]["nu"] == "1");
}

TEST_CASE("cli oracle") {
  auto r = run({"oracle", write_temp("b1b1.json", kB1B1)});
  REQUIRE(r.code == 0);
  auto doc = json::parse(r.out);
  CHECK(doc["laurent"][1]["top_exponent"] == 2);
  CHECK(doc["laurent"][1]["matches_mu"] == true);
  CHECK(doc["brute_force"]["lambda"] == json::array({-1, 1}));
}

TEST_CASE("cli exit codes for malformed input") {
  CHECK(run({"mu", write_temp("broken.json", "{")}).code == 2);
  CHECK(run({"mu", "/nonexistent/file.json"}).code == 2);
  CHECK(run({"mu", write_temp("version.json", R"({"version": "gitstab/0"})")}).code == 2);
  CHECK(run({"mu", write_temp("float.json", R"({"version": "gitstab/1",
      "dec_type": {"r": 2, "components": [{"a": 1}]},
      "tensor": [{"component": 1, "index": [1], "coeff": 0.5}]})")})
            .code == 2);
  CHECK(run({"mu", write_temp("range.json", R"({"version": "gitstab/1",
      "dec_type": {"r": 2, "components": [{"a": 1}]},
      "tensor": [{"component": 1, "index": [3], "coeff": 1}]})")})
            .code == 2);
  CHECK(run({"mu", write_temp("lambda.json", R"({"version": "gitstab/1",
      "dec_type": {"r": 2, "components": [{"a": 1}]},
      "tensor": [{"component": 1, "index": [1], "coeff": 1}], "lambdas": [[1, 1]]})")})
            .code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"check", write_temp("b1b1.json", kB1B1)}).code == 2);  // no ambient or sheaf
}

TEST_CASE("problem files round trip") {
  auto dir = (std::filesystem::temp_directory_path() / "gitstab_cli_examples").string();
  REQUIRE(run({"examples", "--out", dir}).code == 0);
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    std::ifstream in(entry.path());
    json doc = json::parse(in);
    ProblemFile p = parse_problem(doc);
    CHECK(json::parse(problem_to_json(p).dump()) == doc);
  }
}
