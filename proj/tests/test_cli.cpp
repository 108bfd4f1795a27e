#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args, bool stderr_too = false) {
  std::string cmd = std::string(ESAKIA_FORGE) + " " + args + (stderr_too ? " 2>&1" : " 2>/dev/null");
  Run r{-1, {}};
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, p)) > 0;) r.out.append(buf, n);
  int s = pclose(p);
  r.status = WIFEXITED(s) ? WEXITSTATUS(s) : -1;
  return r;
}

std::string data(const std::string& file) { return std::string(DATA_DIR) + "/" + file; }

}  // namespace

TEST_CASE("complex build over the 2-chain") {
  Run r = run("complex build --poset " + data("chain2.json") + " --witness terminal --depth 3 --mode ha");
  REQUIRE(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == "esakia-forge/1");
  CHECK(j["kind"] == "complex");
  std::vector<int> sizes;
  for (const auto& l : j["data"]["layers"]) sizes.push_back(l["size"]);
  CHECK(sizes == std::vector<int>{2, 3, 4, 5});
  CHECK(j["data"]["layers"][2]["elements"][0]["provenance"].is_array());
}

TEST_CASE("boolean step of the 2-chain") {
  Run r = run("variety step --mode bool --poset " + data("chain2.json"));
  REQUIRE(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["data"]["size"] == 2);
  CHECK(j["data"]["leq"].empty());
}

TEST_CASE("lc suite") {
  Run r = run("check --suite lc --max-size 4");
  CHECK(r.status == 0);
  CHECK(r.out.find("[lc] PASS (24 cases)") != std::string::npos);
}

TEST_CASE("dot output") {
  Run r = run("poset --builtin chain:1 --emit dot");
  REQUIRE(r.status == 0);
  CHECK(r.out.rfind("digraph", 0) == 0);
  Run none = run("regular --poset " + data("vee.json") + " --emit dot");
  CHECK(none.status != 0);
}

TEST_CASE("exit statuses") {
  Run unknown = run("frobnicate", true);
  CHECK(unknown.status == 1);
  CHECK(unknown.out.rfind("UnknownSubcommand", 0) == 0);
  Run domain = run("coproduct-godel --left " + data("vee.json") + " --right " + data("chain2.json"), true);
  CHECK(domain.status == 1);
  CHECK(domain.out.rfind("NotPrelinear", 0) == 0);
  Run cap = run("universal --gens 2 --depth 3 --cap-elements 10", true);
  CHECK(cap.status == 2);
  CHECK(cap.out.rfind("SizeLimitExceeded", 0) == 0);
  Run bad = run("eval --frame " + data("vee.json") + " --formula \"p ->\"", true);
  CHECK(bad.status == 1);
  CHECK(bad.out.rfind("ParseError", 0) == 0);
  Run missing = run("poset --poset " + data("nope.json"), true);
  CHECK(missing.status == 1);
}

TEST_CASE("enumeration cap from the environment") {
  std::string cmd = std::string("ESAKIA_FORGE_CAP=3 ") + ESAKIA_FORGE + " complex build --poset " +
                    data("chain3.json") + " --depth 2 >/dev/null 2>&1";
  int s = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(s) == 2);
}

TEST_CASE("eval with a valuation") {
  Run r = run("eval --formula \"p | ~p\" --valuation " + data("chain2_valuation.json"));
  REQUIRE(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["data"]["extension"] == nlohmann::json::array({"1"}));
  CHECK(j["data"]["true_everywhere"] == false);
}
