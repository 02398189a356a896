#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rost/cli.hpp"
#include "rost/report.hpp"
#include "rost/verify.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace rost;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("build emits the normal form") {
  const Result r = call({"build", "chow_rost", "--p", "2", "--n", "2", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["degrees"]["0"]["free"] == 1);
  CHECK(j["degrees"]["2"]["torsion"] == nlohmann::json::array({1}));
  CHECK(j["degrees"]["3"]["free"] == 1);
  CHECK(j["degrees"].size() == 3);

  const Result s = call({"build", "omega_image_rost", "--p", "3", "--structure"});
  CHECK(s.code == 0);
  CHECK(nlohmann::json::parse(s.out).contains("structure"));
  CHECK(call({"build", "chow_rost", "--p", "3", "--format", "text"}).out.find("degree 2: (Z/3)") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(call({"verify", "thm-1.1", "--p", "2"}).code == 0);
  CHECK(call({"verify", "thm-1.1", "--p", "7"}).code == 2);
  CHECK(call({"verify", "remark-4.2-negative", "--p", "2"}).code == 0);
  CHECK(call({"verify", "lemma-7.2", "--image", "none"}).code == 3);
  CHECK(call({"verify", "lemma-7.2", "--image", "product"}).code == 1);
  CHECK(call({"verify", "lemma-4.1", "--n1", "2", "--n2", "2", "--m", "2"}).code == 3);
  CHECK(call({"verify", "thm-5.7-torsion-square", "--n", "3", "--d", "9"}).code == 2);
  CHECK(call({"verify", "thm-5.7-torsion-square", "--n", "3", "--d", "9", "--di", "3,1"}).code == 0);
  CHECK(call({"verify", "no-such-theorem"}).code == 2);
  CHECK(call({"build", "chow_rost", "--bogus", "1"}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({}).code == 2);
  CHECK(call({"build", "chow_rost", "--format", "yaml"}).code == 2);
}

TEST_CASE("verify report round trip") {
  const Result r = call({"verify", "cor-1.3", "--family", "quadric", "--s", "2", "--m", "1"});
  CHECK(r.code == 0);
  const TheoremReport rep = nlohmann::json::parse(r.out).get<TheoremReport>();
  CHECK(rep.verdict == Verdict::verified);
  CHECK(rep.witnesses.at(0).find("c_1(y_1)c_1(y_2)") == 0);
  const nlohmann::json again = rep;
  CHECK(again.get<TheoremReport>() == rep);
}

TEST_CASE("list, tensor and quotient") {
  const auto l = nlohmann::json::parse(call({"list"}).out);
  CHECK(l["objects"].size() == 9);
  CHECK(l["theorems"].size() == theorem_ids().size());
  const Result t = call({"tensor", "chow_rost", "bar_rost", "--p", "2"});
  CHECK(t.code == 0);
  CHECK(nlohmann::json::parse(t.out)["degrees"]["5"]["torsion"] == nlohmann::json::array({1}));
  const Result q = call({"quotient", "chow_rost", "--n", "3", "--kill", "c_2(y)"});
  CHECK(q.code == 0);
  CHECK_FALSE(nlohmann::json::parse(q.out)["degrees"].contains("4"));
  CHECK(call({"quotient", "chow_rost", "--kill", "nothing"}).code == 2);
  CHECK(call({"tensor", "chow_rost"}).code == 2);
}

TEST_CASE("verify-all is deterministic") {
  const Result a = call({"verify-all"});
  const Result b = call({"verify-all", "--serial"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == call({"verify-all"}).out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["summary"]["refuted"] == 0);
  CHECK(j["summary"]["not-certifiable"] == 0);
  CHECK(j["reports"].size() == default_grid().size());
}

TEST_CASE("output file") {
  const std::string path = "rostcalc_test_output.json";
  CHECK(call({"build", "bar_rost", "--out", path}).code == 0);
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(nlohmann::json::parse(ss.str())["p"] == 2);
  std::remove(path.c_str());
}
