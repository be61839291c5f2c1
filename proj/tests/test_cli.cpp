#include "doctest.h"

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "wmp/field.hpp"
#include "wmpcli/cli.hpp"

using json = nlohmann::json;
using wmpcli::run_cli;
using wmpcli::split_command;

namespace {

struct Run {
  int exit_code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return Run{code, out.str(), err.str()};
}

// Temp file that cleans up after itself.
struct TempFile {
  std::string path;
  explicit TempFile(const std::string& contents) {
    char tmpl[] = "/tmp/wmp-manifest-XXXXXX";
    const int fd = mkstemp(tmpl);
    REQUIRE(fd >= 0);
    close(fd);
    path = tmpl;
    std::ofstream f(path);
    f << contents;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("command splitting") {
  CHECK(split_command("vertex --l 1 --lambda 1") ==
        std::vector<std::string>({"vertex", "--l", "1", "--lambda", "1"}));
  CHECK(split_command("   ") == std::vector<std::string>{});
  CHECK(split_command("a\tb  c") == std::vector<std::string>({"a", "b", "c"}));
}

TEST_CASE("vertex text output is canonical and deterministic") {
  const std::vector<std::string> args = {"vertex", "--l", "1", "--lambda", "1",
                                         "--format", "text"};
  const Run first = run(args);
  CHECK(first.exit_code == 0);
  CHECK(first.out == "(h^2*u*w+h*u+h+w)/(h+w)\n");
  const Run second = run(args);
  CHECK(second.out == first.out);
}

TEST_CASE("vertex json schema") {
  const Run r = run({"vertex", "--l", "1", "--lambda", "1"});
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["lambda"] == "1");
  CHECK(j["l"] == 1);
  CHECK(j["routes_agree"] == true);
  CHECK(j["value"] == "(h^2*u*w+h*u+h+w)/(h+w)");
  CHECK(j["classical"] == "(u+1)/(1)");
  // The printed value round-trips through the parser.
  const wmp::FieldElem v = wmp::field_parse(j["value"].get<std::string>());
  CHECK(wmp::field_eq(v, wmp::field_parse("(h*(1+u)+w*(1+h^2*u))/(h+w)")));
}

TEST_CASE("quantum parameter bindings agree") {
  const Run w6 = run({"vertex", "--l", "1", "--lambda", "1", "--format", "text", "--w", "6"});
  const Run z23 = run({"vertex", "--l", "1", "--lambda", "1", "--format", "text", "--z", "2,3"});
  CHECK(w6.exit_code == 0);
  CHECK(w6.out == z23.out);
  // Binding w = 0 reproduces the classical value.
  const Run w0 = run({"vertex", "--l", "1", "--lambda", "1", "--format", "text", "--w", "0"});
  CHECK(w0.out == "(u+1)/(1)\n");
  // --w and --z together is a usage error.
  const Run both = run({"vertex", "--l", "1", "--lambda", "1", "--w", "1", "--z", "2"});
  CHECK(both.exit_code == 2);
}

TEST_CASE("hpoly json payload") {
  const Run r = run({"hpoly", "--l", "2", "--lambda", "2"});
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["l"] == 2);
  CHECK(j["lambda"] == "2");
  CHECK(j["core"] == "");
  CHECK(j["degree"] == 1);
  CHECK(j["basis"] == "p");
  REQUIRE(j["h"]["terms"].size() == 2);
  CHECK(j["norm"] == "(t1^3-t1^2*t2-t1^2+t2)/(t1)");
  // Power-sum expansion p^(0)_1 + t1 p^(1)_1.
  bool saw_color1 = false;
  for (const auto& term : j["h"]["terms"]) {
    REQUIRE(term["monomial"].size() == 1);
    const auto& g = term["monomial"][0];
    CHECK(g[0] == "x");
    CHECK(g[2] == 1);
    if (g[1] == 1) {
      saw_color1 = true;
      CHECK(term["coeff"] == "(t1)/(1)");
    }
  }
  CHECK(saw_color1);
}

TEST_CASE("hpoly alternate bases agree") {
  const Run schur = run({"hpoly", "--l", "2", "--lambda", "2", "--basis", "schur"});
  const Run vecschur = run({"hpoly", "--l", "2", "--lambda", "2", "--basis", "vecschur"});
  REQUIRE(schur.exit_code == 0);
  REQUIRE(vecschur.exit_code == 0);
  const json js = json::parse(schur.out);
  const json jv = json::parse(vecschur.out);
  REQUIRE(js["h"].size() == jv["h"].size());
  // Tuples label quotients; vecschur labels the partitions they rebuild to.
  for (size_t i = 0; i < js["h"].size(); ++i)
    CHECK(js["h"][i]["coeff"] == jv["h"][i]["coeff"]);
  std::vector<std::string> members;
  for (const auto& term : jv["h"]) members.push_back(term["lambda"].get<std::string>());
  CHECK(std::find(members.begin(), members.end(), "2") != members.end());
  CHECK(std::find(members.begin(), members.end(), "1,1") != members.end());
}

TEST_CASE("hpoly text round-trips") {
  const Run r = run({"hpoly", "--l", "1", "--lambda", "2", "--format", "text"});
  REQUIRE(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string line;
  bool saw_norm = false;
  while (std::getline(lines, line)) {
    const auto tab = line.find('\t');
    REQUIRE(tab != std::string::npos);
    const std::string key = line.substr(0, tab);
    const std::string value = line.substr(tab + 1);
    if (key == "norm") saw_norm = true;
    // Every printed coefficient parses back.
    CHECK_NOTHROW((void)wmp::field_parse(value));
  }
  CHECK(saw_norm);
}

TEST_CASE("norm command") {
  const Run r = run({"norm", "--l", "1", "--lambda", "1", "--format", "text"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "(t1*t2-t1-t2+1)/(1)\n");
  const Run j = run({"norm", "--l", "2", "--lambda", "1,1"});
  const json parsed = json::parse(j.out);
  CHECK(wmp::field_eq(wmp::field_parse(parsed["norm"].get<std::string>()),
                      wmp::field_parse("(1-t1/t2)*(1-t2^2)")));
}

TEST_CASE("eval command") {
  const Run r = run({"eval", "--l", "2", "--lambda", "2", "--format", "text"});
  REQUIRE(r.exit_code == 0);
  CHECK(r.out == "0\t(u+1)/(1)\t(u+1)/(1)\ttrue\n1\t(t1*u+1)/(1)\t(t1*u+1)/(1)\ttrue\n");
  const Run one = run({"eval", "--l", "2", "--lambda", "1,1", "--m", "1"});
  const json j = json::parse(one.out);
  CHECK(j["status"] == "pass");
  REQUIRE(j["entries"].size() == 1);
  CHECK(j["entries"][0]["m"] == 1);
  CHECK(j["entries"][0]["equal"] == true);
  // Residue out of range is a usage error.
  CHECK(run({"eval", "--l", "2", "--lambda", "2", "--m", "5"}).exit_code == 2);
}

TEST_CASE("verify commands pass and fail correctly") {
  const Run ortho = run({"verify", "--check", "orthogonality", "--l", "1", "--degree", "2"});
  CHECK(ortho.exit_code == 0);
  const json j = json::parse(ortho.out);
  CHECK(j["status"] == "pass");
  CHECK(j["reports"].size() == 3);
  for (const auto& rep : j["reports"]) {
    CHECK(rep["status"] == "pass");
    CHECK(rep["failures"].empty());
  }
  const Run neg = run({"verify", "--check", "negative-control", "--l", "1"});
  CHECK(neg.exit_code == 1);
  const json nj = json::parse(neg.out);
  CHECK(nj["status"] == "fail");
  REQUIRE(nj["reports"].size() == 1);
  CHECK(nj["reports"][0]["failures"].size() == 1);
  const auto& failure = nj["reports"][0]["failures"][0];
  CHECK(failure.contains("where"));
  CHECK(failure.contains("got"));
  CHECK(failure.contains("expected"));
  // Text format mirrors the status.
  const Run neg_text =
      run({"verify", "--check", "negative-control", "--l", "1", "--format", "text"});
  CHECK(neg_text.exit_code == 1);
  CHECK(neg_text.out.find("status fail") != std::string::npos);
}

TEST_CASE("verify cauchy honors the core flag") {
  const Run r = run({"verify", "--check", "cauchy", "--l", "2", "--degree", "1",
                     "--core", "1"});
  CHECK(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["reports"].size() == 2);
  for (const auto& rep : j["reports"])
    CHECK(rep["params"].get<std::string>().find("core=(1)") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).exit_code == 2);
  CHECK(run({"vertex"}).exit_code == 2);                        // missing required flags
  CHECK(run({"vertex", "--l", "0", "--lambda", "1"}).exit_code == 2);
  CHECK(run({"vertex", "--l", "1", "--lambda", "1", "--format", "yaml"}).exit_code == 2);
  CHECK(run({"verify", "--l", "1", "--check", "bogus"}).exit_code == 2);
  CHECK(run({"verify", "--l", "1", "--check", "cauchy", "--geometric-relation"}).exit_code == 2);
  CHECK(run({"frobnicate"}).exit_code == 2);
  CHECK(run({"hpoly", "--l", "1", "--lambda", "2,3"}).exit_code == 2); // not a partition
  const Run help = run({"--help"});
  CHECK(help.exit_code == 0);
  CHECK(help.out.find("hpoly") != std::string::npos);
}

TEST_CASE("geometric relation specializes printed values") {
  const Run r = run({"norm", "--l", "1", "--lambda", "1", "--format", "text",
                     "--geometric-relation"});
  CHECK(r.exit_code == 0);
  const wmp::FieldElem got = wmp::field_parse(r.out.substr(0, r.out.size() - 1));
  CHECK(wmp::field_eq(got, wmp::field_parse("(1-h^2/t2)*(1-t2)")));
}

TEST_CASE("batch runs manifests") {
  const TempFile manifest(
      "# demo manifest\n"
      "norm --l 1 --lambda 1 --format text\n"
      "\n"
      "verify --check negative-control --l 1\n");
  const Run r = run({"batch", "--manifest", manifest.path});
  CHECK(r.exit_code == 1); // negative control fails
  const json j = json::parse(r.out);
  CHECK(j["status"] == "fail");
  REQUIRE(j["entries"].size() == 2);
  CHECK(j["entries"][0]["exit"] == 0);
  CHECK(j["entries"][1]["exit"] == 1);
  CHECK(j["entries"][1]["output"]["status"] == "fail");

  // Parallel execution returns entries in manifest order with equal payloads.
  const Run par = run({"batch", "--manifest", manifest.path, "--jobs", "4"});
  CHECK(par.out == r.out);

  // Text format, plus exit propagation for an all-pass manifest.
  const TempFile ok("norm --l 1 --lambda 1 --format text\n");
  const Run text = run({"batch", "--manifest", ok.path, "--format", "text"});
  CHECK(text.exit_code == 0);
  CHECK(text.out.find("# exit 0") != std::string::npos);
  CHECK(text.out.find("status pass") != std::string::npos);

  const TempFile empty("# nothing\n");
  CHECK(run({"batch", "--manifest", empty.path}).exit_code == 0);

  const TempFile nested("batch --manifest x\n");
  CHECK(run({"batch", "--manifest", nested.path}).exit_code == 1);

  CHECK(run({"batch", "--manifest", "/nonexistent/path"}).exit_code == 2);
}
