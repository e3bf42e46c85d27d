#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ncg/cli.h"
#include "ncg/io.h"

namespace fs = std::filesystem;
using namespace ncg;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path workdir() {
  const fs::path dir = fs::temp_directory_path() / "ncg-cli-test";
  fs::create_directories(dir);
  return dir;
}

std::string write(const std::string& name, const std::string& content) {
  const fs::path p = workdir() / name;
  std::ofstream(p) << content;
  return p.string();
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

} // namespace

TEST_CASE("check exit codes") {
  const std::string c5 = (workdir() / "c5.json").string();
  REQUIRE(run({"generate", "c5", "--alpha", "2", "-o", c5}).code == cli::kHolds);
  CHECK(run({"check", c5, "--concept", "ge"}).code == cli::kHolds);

  const std::string star = (workdir() / "star.json").string();
  REQUIRE(run({"generate", "cheap-star", "--n", "6", "--alpha", "1/100", "-o", star}).code == 0);
  const Result ne = run({"check", star, "--concept", "ne"});
  CHECK(ne.code == cli::kViolated);
  const Json report = Json::parse(ne.out);
  CHECK(report["verdict"] == "cheap_star");
  CHECK(report["violations"].size() >= 1);
  CHECK(report["violations"][0].contains("strategy"));

  const Result brute = run({"check", star, "--concept", "ne", "--oracle", "brute"});
  CHECK(brute.code == cli::kViolated);
  CHECK(Json::parse(brute.out)["oracle"] == "brute");

  const std::string anti =
      write("anti.json", R"({"n": 2, "arcs": [[0, 1], [1, 0]], "alpha": "1", "objective": "sum"})");
  const Result bad = run({"check", anti, "--concept", "ge"});
  CHECK(bad.code == cli::kError);
  CHECK(bad.err.find("antiparallel") != std::string::npos);

  CHECK(run({"check", (workdir() / "missing.json").string()}).code == cli::kError);
  CHECK(run({"check", c5, "--concept", "xx"}).code == cli::kError);
  CHECK(run({"nonsense"}).code == cli::kError);
}

TEST_CASE("generate is deterministic and validates parameters") {
  const Result a = run({"generate", "sum-lower-bound", "--k", "3"});
  const Result b = run({"generate", "sum-lower-bound", "--k", "3"});
  REQUIRE(a.code == cli::kHolds);
  CHECK(a.out == b.out);
  const InstanceFile f = parse_instance(a.out);
  CHECK(f.graph.size() == 15);
  CHECK(f.config.alpha() == Rational(4));

  CHECK(parse_instance(run({"generate", "cheap-network"}).out).graph.size() == 24);
  const Result small = run({"generate", "cheap-star", "--n", "3", "--alpha", "1/2"});
  CHECK(small.code == cli::kError);
  CHECK(run({"generate", "unknown-family"}).code == cli::kError);

  const fs::path out = workdir() / "bct.json";
  REQUIRE(run({"generate", "badly-connected-tree", "--k", "7", "-o", out.string()}).code == 0);
  const Json sidecar = Json::parse(slurp(workdir() / "bct.expected.json"));
  CHECK(sidecar["expected_ratio"] == "23/20");
}

TEST_CASE("ratio and reduce") {
  const std::string g3 = (workdir() / "g3.json").string();
  REQUIRE(run({"generate", "sum-lower-bound", "--k", "3", "-o", g3}).code == 0);
  const Result r = run({"ratio", g3});
  REQUIRE(r.code == cli::kHolds);
  CHECK(Json::parse(r.out)["beta"] == "12/11");

  const std::string ml = (workdir() / "ml.json").string();
  REQUIRE(run({"generate", "max-lower-bound", "--k", "3", "-o", ml}).code == 0);
  CHECK(Json::parse(run({"ratio", ml}).out)["beta"] == "13/5");

  const Result red = run({"reduce", g3, "--agent", "0"});
  REQUIRE(red.code == cli::kHolds);
  const FLInstance inst = parse_fl_instance(red.out);
  CHECK(inst.facilities == 14);
  CHECK(inst.clients == 14);

  const std::string fl = write("fl.json", red.out);
  const Result solved = run({"solve-fl", fl});
  REQUIRE(solved.code == cli::kHolds);
  CHECK(Json::parse(solved.out)["optimum"]["cost"] == "33");
}

TEST_CASE("sweeps") {
  const std::string c5 = (workdir() / "c5s.json").string();
  REQUIRE(run({"generate", "c5", "--alpha", "2", "-o", c5}).code == 0);
  CHECK(run({"sweep-alpha", c5, "--alphas", "1/2,1,4,9/2", "--concept", "ge"}).out ==
        "alpha,holds\n1/2,no\n1,yes\n4,yes\n9/2,no\n");

  const std::string cwl = (workdir() / "cwl.json").string();
  REQUIRE(run({"generate", "cycle-with-leaves", "-o", cwl}).code == 0);
  CHECK(run({"sweep-alpha", cwl, "--alphas", "6,7,8,9", "--concept", "ge"}).out ==
        "alpha,holds\n6,yes\n7,yes\n8,yes\n9,no\n");

  const std::string cn = (workdir() / "cn.json").string();
  REQUIRE(run({"generate", "cheap-network", "-o", cn}).code == 0);
  CHECK(run({"sweep-alpha", cn, "--alphas", "1/4,1/2,1", "--concept", "ge"}).out ==
        "alpha,holds\n1/4,yes\n1/2,yes\n1,yes\n");
}

TEST_CASE("dynamics and dot") {
  const std::string c5 = (workdir() / "c5d.json").string();
  REQUIRE(run({"generate", "c5", "--alpha", "5", "-o", c5}).code == 0);
  const fs::path dots = workdir() / "frames";
  fs::remove_all(dots);
  const Result d = run({"dynamics", c5, "--policy", "random", "--seed", "3", "--dot-dir",
                        dots.string()});
  REQUIRE(d.code == cli::kHolds);
  const Json t = Json::parse(d.out);
  CHECK(t["converged"] == true);
  CHECK(fs::exists(dots / "step-0000.dot"));
  CHECK(fs::exists(dots / "step-0001.dot"));
  CHECK(run({"dot", c5}).out.rfind("digraph", 0) == 0);
}
