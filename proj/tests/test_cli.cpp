#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "motivic/json_io.hpp"

using namespace motivic;
using json_io::json;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int status = cli::run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

std::string fixture(const std::string& rel) { return std::string(MOTIVIC_KIT_TEST_DATA) + "/" + rel; }

std::string temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / ("motivic_kit_test_" + name);
  std::ofstream(path) << contents;
  return path.string();
}

std::string run_process(const std::string& args) {
  std::string cmd = std::string(MOTIVIC_KIT_CLI_PATH) + " " + args + " 2>&1";
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  pclose(pipe);
  return out;
}

const std::vector<std::vector<std::string>> every_command = {
    {"enumerate-diagrams", "--k", "2", "--bounds", "3,2"},
    {"aut", "--sizes", "4,2", "--values", "0,0,1,1"},
    {"solve-comonoid", "--x", "2", "--y", "3", "--all"},
    {"galois-fixed", "--group", "S3", "--max-size", "2"},
    {"verify-monad", "--k", "1", "--bounds", "3,3"},
    {"hocolim", "--diagram", fixture("covers/two_component_in_four.json"), "--ks"},
    {"kappa", "--components", "A,B", "--ambient", "Xbar", "--dim", "1", "--cross", "Y"},
    {"verify-mcffe", "--x", "3", "--y", "2"},
    {"verify-mdffe", "--x", "2", "--y", "2", "--bound", "2"},
};

}  // namespace

TEST_CASE("documented examples") {
  const Result mc = run({"verify-mcffe", "--x", "2", "--y", "3"});
  CHECK(mc.status == 0);
  CHECK(mc.out == "9 = 9, PASS\n");

  const Result en = run({"enumerate-diagrams", "--k", "2", "--bounds", "2,2"});
  CHECK(en.status == 0);
  std::istringstream lines(en.out);
  std::string line;
  std::size_t rows = 0;
  std::getline(lines, line);  // header
  while (std::getline(lines, line))
    if (line.rfind("count", 0) != 0) ++rows;
  CHECK(rows == 5);

  const Result h = run({"hocolim", "--diagram", fixture("covers/two_component.json")});
  CHECK(h.status == 0);
  CHECK(h.out.rfind("H0=3 H1=0\n", 0) == 0);

  const Result ks = run({"hocolim", "--diagram", fixture("covers/two_component_in_four.json"), "--ks"});
  CHECK(ks.out.find("ks H0=1 H1=0") != std::string::npos);

  const Result md = run({"verify-mdffe", "--x", "2", "--y", "3", "--bound", "2"});
  CHECK(md.status == 0);
  CHECK(md.out.find("equalizer\t9") != std::string::npos);
  CHECK(md.out.find("set maps\t9") != std::string::npos);

  const Result mon = run({"verify-monad", "--k", "1", "--bounds", "3,3"});
  CHECK(mon.status == 0);
  CHECK(mon.out.find("3>2 [0,0,1]\t2\t{1; 2}") != std::string::npos);

  const Result kap = run({"kappa", "--components", "A,B", "--ambient", "Xbar", "--dim", "1"});
  CHECK(kap.out.find("{A,B} = C_*(A∩B)") != std::string::npos);
  CHECK(kap.out.find("colim kappa(-1)[-2]") != std::string::npos);
}

TEST_CASE("every command succeeds and is byte-identical across runs") {
  for (const auto& args : every_command) {
    const Result a = run(args), b = run(args);
    CHECK_MESSAGE(a.status == 0, args.front() << ": " << a.err);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
  }
  const std::string p1 = run_process("verify-monad --k 2 --bounds 2,2,2 --format json");
  const std::string p2 = run_process("verify-monad --k 2 --bounds 2,2,2 --format json");
  CHECK(p1 == p2);
  CHECK(json::parse(p1)["pass"] == true);
}

TEST_CASE("JSON output re-parses under the module schemas") {
  for (auto args : every_command) {
    args.push_back("--format");
    args.push_back("json");
    const Result r = run(args);
    REQUIRE(r.status == 0);
    const json j = json::parse(r.out);
    CHECK(j["pass"] == true);
    CHECK(j["command"] == args.front());
  }
  const json en = json::parse(run({"enumerate-diagrams", "--k", "2", "--bounds", "3,2", "--format", "json"}).out);
  for (const auto& row : en["classes"]) {
    const FinDiagram d = json_io::diagram_from_json(row["diagram"]);
    CHECK(canonical_form(d) == d);
  }
  const json aut = json::parse(run({"aut", "--sizes", "4,2", "--values", "0,0,1,1", "--format", "json"}).out);
  CHECK(json_io::permgroup_from_json(aut["group"]).order == 8);
  CHECK_NOTHROW(json_io::diagram_from_json(aut["canonical"]));
  const json sol = json::parse(run({"solve-comonoid", "--x", "2", "--y", "3", "--all", "--format", "json"}).out);
  CHECK(sol["morphisms"].size() == 9);
  for (const auto& m : sol["morphisms"]) CHECK_NOTHROW(json_io::morphism_from_json(m));
  const json gal = json::parse(run({"galois-fixed", "--group", "C3", "--max-size", "2", "--format", "json"}).out);
  CHECK(json_io::group_from_json(gal["group"]).order() == 3);
  const json hoc =
      json::parse(run({"hocolim", "--diagram", fixture("covers/two_component.json"), "--format", "json"}).out);
  CHECK(homology_dims(json_io::complex_from_json(hoc["total"])).at(0) == 3);
  CHECK(hoc["homology"]["0"] == 3);
}

TEST_CASE("--output writes the report to a file") {
  const auto path = std::filesystem::temp_directory_path() / "motivic_kit_test_output.txt";
  const Result r = run({"verify-mcffe", "--x", "2", "--y", "2", "--output", path.string()});
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(line == "4 = 4, PASS");
}

TEST_CASE("invalid input gives a nonzero exit naming the invariant") {
  const Result missing = run({"hocolim", "--diagram", "/nonexistent/file.json"});
  CHECK(missing.status != 0);
  CHECK(missing.err.find("cannot open") != std::string::npos);

  const Result garbage = run({"hocolim", "--diagram", temp_file("garbage.json", "{not json")});
  CHECK(garbage.status != 0);
  CHECK(garbage.err.find("not valid JSON") != std::string::npos);

  const Result bad_cover = run({"hocolim", "--diagram",
                                temp_file("bad_cover.json", R"({"cover":{"points":["a"],"components":[["q"]]}})")});
  CHECK(bad_cover.status != 0);
  CHECK(bad_cover.err.find("cover components may only mention listed points") != std::string::npos);

  const Result bad_square = run(
      {"hocolim", "--diagram",
       temp_file("bad_cube.json",
                 R"({"index_size":2,"vertices":[
                      {"subset":1,"complex":{"lo":0,"hi":0,"dims":{"0":1}}},
                      {"subset":2,"complex":{"lo":0,"hi":0,"dims":{"0":1}}},
                      {"subset":3,"complex":{"lo":0,"hi":1,"dims":{"0":1,"1":1},
                        "differentials":{"1":{"rows":1,"cols":1,"entries":["1"]}}}}],
                     "edges":[{"subset":3,"index":0,"map":{"components":{"1":{"rows":0,"cols":1,"entries":[]}}}}]})")});
  CHECK(bad_square.status != 0);
  CHECK(bad_square.err.find("error:") != std::string::npos);

  const Result bad_group = run({"galois-fixed", "--group", temp_file("bad_group.json", R"({"order":2,"table":[[0,1],[1,1]]})")});
  CHECK(bad_group.status != 0);
  CHECK(bad_group.err.find("FiniteGroup") != std::string::npos);

  const Result bad_diagram =
      run({"aut", "--diagram", temp_file("bad_diagram.json", R"({"sets":[{"size":2},{"size":1}],"maps":[{"dom":2,"cod":1,"values":[0,1]}]})")});
  CHECK(bad_diagram.status != 0);

  CHECK(run({"enumerate-diagrams", "--k", "2", "--bounds", "2"}).status != 0);
  CHECK(run({"no-such-command"}).status != 0);
  CHECK(run({"verify-mcffe", "--x", "2", "--y", "2", "--format", "xml"}).status != 0);
}

TEST_CASE("safety bound and its environment override") {
  unsetenv("MOTIVIC_KIT_MAX_SIZE");
  CHECK(cli::safety_bound() == 6);
  const Result big = run({"verify-mcffe", "--x", "7", "--y", "1"});
  CHECK(big.status != 0);
  CHECK(big.err.find("safety bound") != std::string::npos);
  setenv("MOTIVIC_KIT_MAX_SIZE", "7", 1);
  CHECK(cli::safety_bound() == 7);
  CHECK(run({"verify-mcffe", "--x", "7", "--y", "1"}).status == 0);
  setenv("MOTIVIC_KIT_MAX_SIZE", "junk", 1);
  CHECK(cli::safety_bound() == 6);
  unsetenv("MOTIVIC_KIT_MAX_SIZE");
}
