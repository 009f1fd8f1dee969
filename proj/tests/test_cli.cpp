#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <doctest.h>

#include "fixtures.hpp"
#include "hopfdouble/cli.hpp"
#include "hopfdouble/serialize.hpp"

using namespace hopfdouble;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "hopfdouble_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream(p) << text;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("group calculi for S3") {
  Run r = run_cli({"group", "--generators", "(12),(123)", "calculi"});
  REQUIRE(r.code == kExitPass);
  Json j = Json::parse(r.out);
  CHECK(j["passed"] == true);
  CHECK(j["result"]["nontrivial_classes"] == 2);
  CHECK(j["result"]["generic_calculi"] == 2);
  std::vector<int> dims;
  for (const auto& c : j["result"]["calculi"])
    if (!c["degenerate"].get<bool>()) dims.push_back(c["dim"].get<int>());
  CHECK(dims == std::vector<int>{3, 2});
}

TEST_CASE("reports are byte-identical across runs") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"group", "--generators", "(12),(123)", "calculi"}, {"eq2", "--z", "0.7", "--z", "1.3"}}) {
    Run a = run_cli(args);
    Run b = run_cli(args);
    CHECK(a.code == kExitPass);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("exported algebras reload to the same structure") {
  FiniteGroup s3 = fixtures::s3();
  Run r = run_cli({"group", "--generators", "(12),(123)", "export-hopf"});
  REQUIRE(r.code == kExitPass);
  HopfData loaded = hopf_from_json(Json::parse(r.out));
  HopfData original = function_hopf(s3)->data();
  CHECK(loaded.dim == original.dim);
  CHECK(loaded.labels == original.labels);
  CHECK(loaded.mult == original.mult);
  CHECK(loaded.comult == original.comult);
  CHECK(loaded.unit == original.unit);
  CHECK(loaded.counit == original.counit);
  CHECK(loaded.antipode == original.antipode);

  Json sweedler = hopf_to_json(fixtures::sweedler_data());
  HopfData back = hopf_from_json(sweedler);
  CHECK(hopf_to_json(back) == sweedler);
}

TEST_CASE("file commands on exported inputs") {
  auto alg = temp_file("s3.json");
  auto rep = temp_file("s3_rep.json");
  REQUIRE(run_cli({"group", "--generators", "(12),(123)", "export-hopf", "--out", alg.string()}).code == kExitPass);
  REQUIRE(run_cli({"group", "--generators", "(12),(123)", "export-rep", "--class", "2", "--out", rep.string()}).code ==
          kExitPass);
  CHECK(run_cli({"verify-hopf", alg.string()}).code == kExitPass);
  Run dbl = run_cli({"double", alg.string()});
  CHECK(dbl.code == kExitPass);
  CHECK(Json::parse(dbl.out)["result"]["dim"] == 36);
  for (const char* cmd : {"bimodule", "calculi", "cohomology"}) {
    CAPTURE(cmd);
    Run r = run_cli({cmd, rep.string()});
    CHECK(r.code == kExitPass);
    CHECK(Json::parse(r.out)["passed"] == true);
  }
  Json calc = Json::parse(run_cli({"calculi", rep.string()}).out);
  CHECK(calc["result"]["selection"] == "found");
  CHECK(calc["result"]["n"] == 2);
}

TEST_CASE("axiom failures exit with 1 and a witness") {
  Json h = hopf_to_json(fixtures::fz2_data());
  h["counit"][1] = "1/2";
  auto p = temp_file("broken.json");
  write_file(p, h.dump());
  Run r = run_cli({"verify-hopf", p.string()});
  CHECK(r.code == kExitCheckFailed);
  Json j = Json::parse(r.out);
  CHECK(j["passed"] == false);
  bool witness = false;
  for (const auto& c : j["checks"])
    if (!c["passed"].get<bool>() && c.contains("witness")) witness = true;
  CHECK(witness);
}

TEST_CASE("input errors exit with 2 and a location") {
  auto p = temp_file("bad.json");
  write_file(p, R"({"format":"hopf-algebra/1","dim":2,"unit":["1","1"],"counit":["1","0"],"mult":[[0,0,5,"1"]],"comult":[],"antipode":[]})");
  Run r = run_cli({"verify-hopf", p.string()});
  CHECK(r.code == kExitInputError);
  CHECK(r.err.find("$/mult/0/2") != std::string::npos);

  write_file(p, "{not json");
  CHECK(run_cli({"verify-hopf", p.string()}).code == kExitInputError);
  CHECK(run_cli({"verify-hopf", temp_file("missing.json").string()}).code == kExitInputError);
  CHECK(run_cli({}).code == kExitInputError);
  CHECK(run_cli({"group", "calculi"}).code == kExitInputError);
  CHECK(run_cli({"group", "--generators", "(12)", "explode"}).code == kExitInputError);
  CHECK(run_cli({"eq2", "--z", "0"}).code == kExitInputError);
}

TEST_CASE("size guard") {
  CHECK(run_cli({"group", "--generators", "(12),(123)", "info", "--max-dim", "4"}).code == kExitInputError);
  CHECK(run_cli({"group", "--generators", "(12345),(12)", "info"}).code == kExitInputError);
  CHECK(run_cli({"group", "--generators", "(12345),(12)", "info", "--max-dim", "120"}).code == kExitPass);
  setenv("HOPFDOUBLE_MAX_DIM", "3", 1);
  CHECK(run_cli({"group", "--generators", "(1234)", "info"}).code == kExitInputError);
  setenv("HOPFDOUBLE_MAX_DIM", "oops", 1);
  CHECK(run_cli({"group", "--generators", "(1234)", "info"}).code == kExitInputError);
  unsetenv("HOPFDOUBLE_MAX_DIM");
  CHECK(run_cli({"group", "--generators", "(1234)", "info"}).code == kExitPass);
}

TEST_CASE("eq2 report") {
  auto p = temp_file("eq2.json");
  Run r = run_cli({"eq2", "--z", "0.7", "--tol", "1e-10", "--out", p.string()});
  CHECK(r.code == kExitPass);
  CHECK(r.out.empty());
  Json j = Json::parse(read_file(p));
  CHECK(j["passed"] == true);
  CHECK(j["result"]["samples"][0]["relations"].size() == 15);
  CHECK(j["result"]["reference_f"][3][3] == "e^{-zJ}");
  Run strict = run_cli({"eq2", "--z", "0.7", "--tol", "0"});
  CHECK(strict.code == kExitCheckFailed);
}

TEST_CASE("cayley table input") {
  auto p = temp_file("z3.json");
  write_file(p, group_to_json(cyclic_group(3)).dump());
  Run r = run_cli({"group", "--table", p.string(), "calculi"});
  CHECK(r.code == kExitPass);
  CHECK(Json::parse(r.out)["result"]["generic_calculi"] == 2);
  write_file(p, R"({"format":"cayley-table/1","table":[[0,1,2],[1,0,0],[2,0,1]]})");
  Run bad = run_cli({"group", "--table", p.string(), "info"});
  CHECK(bad.code == kExitInputError);
  CHECK(bad.err.find("associativity") != std::string::npos);
}
