#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

using json = nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// stderr is discarded; only stdout is captured.
Run run(const std::string& args) {
  const std::string cmd = std::string("\"") + TSG_CLI + "\" " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("analyze --group D6 --left s").code == 2);
  CHECK(run("analyze --group Q8 --left s --right t").code == 2);
  CHECK(run("analyze --group D6 --left s,u --right t").code == 2);
  CHECK(run("analyze --group D6 --left s --right t --checks colours").code == 2);
  CHECK(run("analyze --group D6 --left s --right t --checks retract").code == 2);
  CHECK(run("verify --max-order 61").code == 2);
  CHECK(run("verify --instances 0").code == 2);
  CHECK(run("paper-examples --only nope").code == 2);
  CHECK(run("dot --group C3").code == 2);
  CHECK(run("dot --group C3 --left e --right g --cayley g").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("analyze") {
  const Run text = run("analyze --group A4 --left \"e,(243)\" --right \"(234),(12)(34),(132),(14)(23)\"");
  CHECK(text.code == 0);
  CHECK(text.out.find("out-valency constant 7") != std::string::npos);
  CHECK(text.out.find("1 strong, 1 weak") != std::string::npos);

  const std::string args = "analyze --group A5 --left \"(235)\" --right \"(243),(254)\" --checks cosets,burnside --json";
  const Run a = run(args);
  REQUIRE(a.code == 0);
  const json j = json::parse(a.out);
  CHECK(j["results"]["cosets"]["total_components"] == 7);
  CHECK(j["results"]["burnside"]["components"] == 7);
  CHECK(run(args).out == a.out);
}

TEST_CASE("analyze writes DOT to a file") {
  const auto path = std::filesystem::temp_directory_path() / "tsg_cli_test.dot";
  std::filesystem::remove(path);
  const Run r = run("analyze --group D6 --left t,ts^5 --right ts,ts^2 --json --dot \"" + path.string() + "\"");
  REQUIRE(r.code == 0);
  CHECK_FALSE(json::parse(r.out).contains("dot"));
  std::ifstream in(path);
  std::stringstream body;
  body << in.rdbuf();
  CHECK(body.str().rfind("digraph", 0) == 0);
  CHECK(body.str() == run("dot --group D6 --left t,ts^5 --right ts,ts^2").out);
  std::filesystem::remove(path);
}

TEST_CASE("paper-examples") {
  const Run all = run("paper-examples");
  CHECK(all.code == 0);
  CHECK(all.out.find("10/10 fixtures passed") != std::string::npos);
  const Run one = run("paper-examples --only d10-isomorphic --json");
  REQUIRE(one.code == 0);
  const json j = json::parse(one.out);
  REQUIRE(j["fixtures"].size() == 1);
  CHECK(j["fixtures"][0]["pass"] == true);
  CHECK(run("paper-examples --json").out == run("paper-examples --json").out);
}

TEST_CASE("verify is reproducible") {
  const Run a = run("verify --seed 3 --instances 40 --max-order 16 --json");
  REQUIRE(a.code == 0);
  CHECK(json::parse(a.out)["passed"] == 40);
  CHECK(run("verify --seed 3 --instances 40 --max-order 16 --json --threads 3").out == a.out);
  CHECK(run("verify --seed 4 --instances 40 --max-order 16 --json").out != a.out);
  const Run text = run("verify --instances 10");
  CHECK(text.code == 0);
  CHECK(text.out.find("10/10 instances passed") != std::string::npos);
}

TEST_CASE("dot") {
  const Run c = run("dot --group C2 --left e --right e");
  CHECK(c.code == 0);
  CHECK(c.out == "digraph \"2S(C2;{e},{e})\" {\n  0 [label=\"e\"];\n  1 [label=\"g\"];\n  0 -> 0;\n  1 -> 1;\n}\n");
  const Run cay = run("dot --group C5 --cayley g");
  CHECK(cay.code == 0);
  CHECK(cay.out.find("4 -> 0") != std::string::npos);
}
