#include "brauer/cli.hpp"
#include "brauer/serialize.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

using namespace brauer;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("count") {
  Run r = run({"count", "--type", "C", "--n", "4"});
  CHECK(r.status == cli::kExitOk);
  CHECK(r.out == "{\"a\":5937}\n");
  CHECK(run({"count", "--type", "A", "--n", "4"}).json()["rank"] == 105);
  CHECK(run({"count", "--n", "10"}).json()["a"] == count_closed(10).convert_to<long long>());
}

TEST_CASE("eval matches the library") {
  Run r = run({"eval", "--type", "C", "--n", "2", "--word", "e1,e0,e1"});
  REQUIRE(r.status == cli::kExitOk);
  Monomial m = monomial_from_json(r.json());
  Monomial e1 = eval_C(word_e(1), 2);
  CHECK(m == Monomial{e1.delta_exp + 1, e1.diagram});

  Run a = run({"eval", "--type", "A", "--n", "3", "--word", "E1,E2,E1"});
  CHECK(monomial_from_json(a.json()) == Monomial{0, generator_E(3, 1)});
}

TEST_CASE("mul multiplies in order") {
  Run r = run({"mul", "--type", "A", "--n", "3", "--word", "R1", "--word", "E2", "--word", "R1"});
  REQUIRE(r.status == cli::kExitOk);
  CHECK(monomial_from_json(r.json()) == evaluate_word(parse_word_a("R1,E2,R1"), 3));
}

TEST_CASE("phi") {
  Json j = run({"phi", "--n", "2", "--word", "e1,r0"}).json();
  CHECK(j["strands"] == 4);
  CHECK(j["word"] == Json::array({"E1", "E3", "R2"}));
}

TEST_CASE("orbit") {
  Json j = run({"orbit", "--n", "3", "--i", "1", "--p", "1"}).json();
  CHECK(j["size"] == 3);
  CHECK(j["expected"] == 3);
  CHECK(j["representatives"].size() == 3);
}

TEST_CASE("basis") {
  Json j = run({"basis", "--n", "2"}).json();
  CHECK(j["size"] == 25);
  CHECK(j["elements"].size() == 25);
  CHECK(run({"basis", "--n", "5"}).status == cli::kExitUsage);
}

TEST_CASE("decompose") {
  Json j = run({"decompose", "--type", "A", "--n", "4", "--word", "R1,E2,R3"}).json();
  CHECK(j["heights"]["a"] == 2);
  CHECK(j["heights"]["U"].get<int>() + j["heights"]["V"].get<int>() + j["heights"]["W"].get<int>() == 2);
}

TEST_CASE("cell and parabolic") {
  Json c = run({"cell", "--n", "2"}).json();
  CHECK(c.contains("layers"));
  CHECK(run({"parabolic", "--n", "3", "--J", "1,2"}).json()["rank"] == 15);
  CHECK(run({"parabolic", "--n", "3", "--J", "0,1"}).json()["rank"] == 25);
}

TEST_CASE("verify") {
  Run r = run({"verify", "--suite", "relations", "--n", "3"});
  CHECK(r.status == cli::kExitOk);
  Json j = r.json();
  CHECK(j["passed"] == true);
  CHECK(j["reports"].size() == 2);

  Run all = run({"verify", "--all", "--n", "2"});
  CHECK(all.status == cli::kExitOk);
  const Json summary = all.json();
  CHECK(summary["skipped"].empty());
  std::set<std::string> suites;
  for (const auto& rep : summary["reports"]) suites.insert(rep["suite"].get<std::string>());
  CHECK(suites.size() == cli::suite_names().size());
}

TEST_CASE("output is byte-stable") {
  std::vector<std::string> args{"basis", "--n", "3"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("--out writes the file") {
  const std::string path = "test_cli_out.json";
  Run r = run({"count", "--n", "2", "--out", path});
  CHECK(r.status == cli::kExitOk);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::string text((std::istreambuf_iterator<char>(f)), {});
  CHECK(text == "{\"a\":25}\n");
  std::remove(path.c_str());
}

TEST_CASE("usage errors") {
  CHECK(run({}).status == cli::kExitUsage);
  CHECK(run({"frobnicate"}).status == cli::kExitUsage);
  CHECK(run({"count"}).status == cli::kExitUsage);
  CHECK(run({"count", "--type", "B", "--n", "2"}).status == cli::kExitUsage);
  CHECK(run({"eval", "--n", "2", "--word", "x9"}).status == cli::kExitUsage);
  CHECK(run({"eval", "--n", "2", "--word", "r5"}).status == cli::kExitUsage);
  CHECK(run({"verify", "--n", "2", "--suite", "nonsense"}).status == cli::kExitUsage);
  CHECK(run({"verify", "--n", "9", "--suite", "cell"}).status == cli::kExitUsage);
  Run r = run({"verify", "--n", "2"});
  CHECK(r.status == cli::kExitUsage);
  CHECK_FALSE(r.err.empty());
  CHECK(run({"--help"}).status == cli::kExitOk);
}
