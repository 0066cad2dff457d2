#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(TRIALG_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::ordered_json doc(const Run& r) { return nlohmann::ordered_json::parse(r.out); }

std::string temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("trialg_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

const char* kZero3 =
    R"({"dim":2,"arity":3,"ring":{"kind":"Q"},"entries":[["0","0","0","0","0","0","0","0"],["0","0","0","0","0","0","0","0"]]})";
const char* kSqrt2 =
    R"({"dim":2,"arity":3,"ring":{"kind":"Q"},"entries":[["2","0","0","0","0","0","0","0"],["0","0","0","0","0","0","0","0"]]})";

}  // namespace

TEST_CASE("cli generate") {
  Run a12 = run("generate --name A12 --arity 3");
  CHECK(a12.code == 0);
  CHECK(doc(a12)["entries"][0][0] == "0");
  Run b4 = run("generate --name A4 --params a1=1,b2=1");
  CHECK(b4.code == 0);
  Run ref = run("catalog --name B4 --params a1=1,b2=1");
  CHECK(b4.out == ref.out);
  CHECK(run("generate --name A4 --params a1=1,b2=1 --arity 1").code == 2);
  CHECK(run("generate --name A4 --params a1=1").code == 2);
  std::string bad = temp_file("bad.json", R"({"dim":2,"arity":2,"ring":{"kind":"Q"},"entries":[["0","0","0"],["1","0","0","0"]]})");
  CHECK(run("generate --input " + bad).code == 2);
  CHECK(run("generate --input /nonexistent/file.json").code == 2);
  CHECK(run("generate --name B9").code == 2);
}

TEST_CASE("cli assoc") {
  Run ok = run("assoc --name B2 --params a1=1/2,b1=0,b2=1/2");
  CHECK(ok.code == 0);
  CHECK(doc(ok)["verdict"] == true);
  Run bad = run("assoc --name A2 --params a1=0,b1=0,b2=0");
  CHECK(bad.code == 1);
  CHECK(doc(bad)["violating_tuple"] == nlohmann::ordered_json::array({2, 1, 1}));
  CHECK(run("assoc --input " + temp_file("zero3.json", kZero3)).code == 0);
  Run four = run("generate --name A9 --arity 4");
  CHECK(run("assoc --input " + temp_file("four.json", four.out)).code == 2);
}

TEST_CASE("cli iso") {
  Run none = run("iso --a-name A4 --a-params a1=1,b2=1 --b-name A4 --b-params a1=1,b2=-1 --prime 5");
  CHECK(none.code == 1);
  CHECK(doc(none)["witness_count"] == 0);
  Run self = run("iso --a-name B9 --b-name B9 --prime 5 --all");
  CHECK(self.code == 0);
  bool identity = false;
  auto self_doc = doc(self);
  for (const auto& w : self_doc["witnesses"])
    identity = identity || w == nlohmann::ordered_json::parse(R"([["1","0"],["0","1"]])");
  CHECK(identity);
  CHECK(run("iso --a-name Cstar --b-name B10 --prime 5").code == 1);
  CHECK(run("iso --a-name B9 --b-name Cdagger --prime 3").code == 2);
  CHECK(run("iso --a-name B9 --b-name A9 --prime 5").code == 2);
  CHECK(run("iso --a-name B9 --b-name B9").code == 2);
}

TEST_CASE("cli express") {
  Run dag = run("express --name Cdagger");
  CHECK(dag.code == 0);
  CHECK(doc(dag)["status"] == "witness");
  CHECK(run("express --name Cstar --primes 5,7").code == 1);
  Run zero = run("express --input " + temp_file("zero3e.json", kZero3));
  CHECK(zero.code == 0);
  auto zero_doc = doc(zero);
  for (const auto& [k, v] : zero_doc["witness"].items()) CHECK(v == "0");
  Run capped = run("express --name Cstar --primes 5,7 --groebner --max-pairs 1");
  CHECK(capped.code == 1);
  auto gb = doc(capped)["evidence"].back();
  CHECK(gb["method"] == "buchberger");
  CHECK(gb["status"] == "inconclusive");
  CHECK(gb["effort"]["caps_hit"] == true);
  // 2 is a square mod 7 but not over Q.
  CHECK(run("express --primes 7 --groebner --input " + temp_file("sqrt2.json", kSqrt2)).code == 3);
  CHECK(run("express --name Cstar --primes 4").code == 2);
  CHECK(run("express --name A9").code == 2);
}

TEST_CASE("cli catalog, scans and replay") {
  Run bundle = run("catalog");
  CHECK(bundle.code == 0);
  CHECK(doc(bundle)["families"].contains("Ex52"));
  Run scan = run("totassoc-scan --family B4");
  CHECK(scan.code == 0);
  CHECK(doc(scan)["points"].size() == 7);
  Run scan2 = run("totassoc-scan --family B4 --grid 0,1");
  CHECK(doc(scan2)["points"].size() == 3);
  CHECK(run("totassoc-scan --family A4").code == 2);
  CHECK(run("table1-verify").code == 1);

  std::string out = (std::filesystem::temp_directory_path() / "trialg_cli_replay.json").string();
  Run first = run("paper-replay --jobs 2 --out " + out);
  CHECK(first.code == 1);
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  auto report = nlohmann::ordered_json::parse(ss.str());
  CHECK(report["claims"].size() >= 20);
  CHECK(report["claims"][7]["id"] == "T-A8");
  CHECK(report["claims"][7]["evidence"]["mismatches"][0]["documented"] == true);
  Run again = run("paper-replay");
  CHECK(again.out == ss.str());
  CHECK(run("paper-replay --out /nonexistent/dir/report.json").code == 2);
  CHECK(run("no-such-command").code == 2);
  CHECK(run("").code == 2);
}
