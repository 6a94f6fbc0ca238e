#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "vwc/datasets.hpp"
#include "vwc/io.hpp"

using namespace vwc;
using io::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write(const std::string& name, const std::string& text) {
  const auto dir = std::filesystem::temp_directory_path() / "vwc_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << text;
  return path.string();
}


const std::string kP4w = write("p4w.json", R"({"n":4,"edges":[[0,1],[1,2],[2,3]],"edge_weights":[[0,1,2],[1,2,1],[2,3,3]]})");
const std::string kP4bad = write("p4bad.json", R"({"n":4,"edges":[[0,1],[1,2],[2,3]],"edge_weights":[[0,1,1],[1,2,2],[2,3,1]]})");
const std::string kTriangle = write("triangle.json", R"({"n":3,"edges":[[0,1],[1,2],[0,2]]})");
const std::string kC4 = write("c4.json", R"({"n":4,"edges":[[0,1],[1,2],[2,3],[0,3]]})");
const std::string kBigIdeal = write("big.json", R"({"nvars":2,"gens":[[20,20]]})");
const std::string kMalformed = write("malformed.json", "{\"n\": 4,\n \"edges\": [[0,1],\n");
const std::string kLoop = write("loop.json", R"({"n":2,"edges":[[0,1],[1,1]]})");
const std::string kBowtie = write("bowtie.json", R"({"nverts":5,"facets":[[0,1,2],[0,3,4]]})");
const std::string kSquare = write("square.json", R"({"nvars":2,"gens":[[2,0],[1,1]]})");

}  // namespace

TEST_CASE("check-unmixed") {
  const Result both = run({"check-unmixed", "--both", kP4w});
  CHECK(both.code == 0);
  CHECK(both.out == "criterion: true\nbruteforce: true\n");

  const Result bad = run({"check-unmixed", kP4bad});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("witness criterion: (i)") != std::string::npos);
  CHECK(bad.out.find("MISMATCH") == std::string::npos);

  CHECK(run({"check-unmixed", "--bruteforce", kTriangle}).code == 0);
  CHECK(run({"check-unmixed", "--criterion", kTriangle}).code == 2);
  CHECK(run({"check-unmixed", "--criterion", "--bruteforce", kP4w}).code == 2);
}

TEST_CASE("min-primes prints one prime per line") {
  const Result r = run({"min-primes", kTriangle});
  CHECK(r.code == 0);
  CHECK(r.out == "x0 x1\nx0 x2\nx1 x2\n");
  const json j = json::parse(run({"min-primes", "--json", kTriangle}).out);
  CHECK(j["primes"] == json::parse(R"([["x0","x1"],["x0","x2"],["x1","x2"]])"));
  CHECK(j["heights"] == json::parse("[2,2,2]"));
  CHECK(run({"min-primes", kSquare}).code == 2);
}

TEST_CASE("check-cm") {
  const Result c4 = run({"check-cm", "--criterion", kC4});
  CHECK(c4.code == 1);
  CHECK(c4.out.find("(**)") != std::string::npos);

  const json j = json::parse(run({"check-cm", "--both", "--json", kC4}).out);
  CHECK(j["verdicts"]["criterion"] == false);
  CHECK(j["verdicts"]["homology"] == false);
  CHECK(j["witnesses"]["criterion"][0]["clause"] == "(**)");
  CHECK_FALSE(j.contains("mismatch"));

  CHECK(run({"check-cm", kP4w}).code == 0);
  CHECK(run({"check-cm", kP4bad}).code == 1);
  CHECK(run({"check-cm", "--homology", "--example", "G"}).code == 0);
  CHECK(run({"check-cm", "--example", "D1"}).code == 1);
}

TEST_CASE("check-s2 names the polarized status for non-squarefree input") {
  const Result r = run({"check-s2", "--example", "Gw1"});
  CHECK(r.code == 1);
  CHECK(r.out.find("S_2 status of the polarized ideal") != std::string::npos);
  CHECK(run({"check-s2", "--example", "Gw2"}).code == 0);
  CHECK(run({"check-s2", kBowtie}).code == 1);
  CHECK(run({"check-s2", "--s", "1", kBowtie}).code == 0);
  CHECK(run({"check-s2", "--s", "0", kBowtie}).code == 2);
}

TEST_CASE("depth, dim, polarize, homology") {
  CHECK(run({"depth", "--example", "D1"}).out == "depth: 2\nmethod: hochster\n");
  CHECK(run({"depth", "--method", "links", "--example", "D2"}).out == "depth: 2\nmethod: links\n");
  CHECK(run({"depth", "--method", "other", "--example", "D2"}).code == 2);
  CHECK(run({"dim", "--example", "D1"}).out == "dim: 3\nheight: 8\n");
  CHECK(run({"polarize", kSquare}).out == "x0_1*x0_2\nx0_1*x1_1\n");
  const Result h = run({"homology", kBowtie});
  CHECK(h.code == 0);
  CHECK(h.out == "acyclic\n");
  const json hj = json::parse(run({"homology", "--json", kTriangle}).out);
  CHECK(hj["homology"] == json::parse(R"({"0":2})"));
}

TEST_CASE("paper-examples") {
  const Result r = run({"paper-examples", "D1", "D2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("D1\tdepth\t2\t2\tagree") != std::string::npos);
  CHECK(r.out.find("MISMATCH") == std::string::npos);
  CHECK(run({"paper-examples", "D9"}).code == 2);
}

TEST_CASE("fuzz") {
  const Result r = run({"fuzz", "--count", "40", "--h-max", "3", "--w-max", "2", "--seed", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("unmixed_mismatches: 0") != std::string::npos);
  CHECK(run({"fuzz", "--count", "40", "--h-min", "3", "--h-max", "2"}).code == 2);
}

TEST_CASE("exit code matrix") {
  for (const std::string cmd : {"check-unmixed", "check-cm", "check-s2", "depth", "dim", "min-primes", "polarize",
                                "homology"}) {
    CAPTURE(cmd);
    const Result malformed = run({cmd, kMalformed});
    CHECK(malformed.code == 2);
    CHECK(malformed.err.find("line 3, column 1") != std::string::npos);
    CHECK(run({cmd, kLoop}).code == 2);
    CHECK(run({cmd, "/nonexistent/input.json"}).code == 2);
    CHECK(run({cmd}).code == 2);
    if (cmd != "min-primes") CHECK(run({cmd, kBigIdeal}).code == 3);
  }
  CHECK(run({}).code == 2);
  CHECK(run({"no-such-command"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"dim", "--field", "4", kTriangle}).code == 0);
  CHECK(run({"check-cm", "--field", "4", kTriangle}).code == 2);
}

TEST_CASE("JSON report document") {
  const json j = json::parse(run({"check-unmixed", "--json", "--both", kP4w}).out);
  for (const char* key : {"tool", "version", "command", "input_digest", "field", "verdicts", "witnesses", "timings_ms"})
    CHECK(j.contains(key));
  CHECK(j["command"] == "check-unmixed");
  CHECK(j["field"] == 0);
  CHECK(j["input_digest"].get<std::string>().size() == 16);

  json again = json::parse(run({"check-unmixed", "--json", "--both", kP4w}).out);
  json first = j;
  first.erase("timings_ms");
  again.erase("timings_ms");
  CHECK(first == again);

  const std::string out = write("report.json", "");
  CHECK(run({"dim", "--json", "--out", out, kTriangle}).out.empty());
  CHECK(io::read_file(out)["dim"] == 1);
}

TEST_CASE("embedded datasets round-trip through JSON") {
  for (const auto& d : {datasets::d1(), datasets::d2()}) {
    const json j = io::to_json(d);
    const auto back = io::oriented_from_json(io::parse(j.dump())).graph;
    CHECK(io::digest(io::to_json(back)) == io::digest(j));
    CHECK(oriented_edge_ideal(back) == oriented_edge_ideal(d));
  }
  for (const auto& w : {datasets::edge_weights_w1(), datasets::edge_weights_w2()}) {
    const io::GraphDocument doc{datasets::graph_g(), w, std::nullopt};
    const json j = io::to_json(doc);
    CHECK(io::graph_from_json(io::parse(j.dump())) == doc);
    CHECK(io::digest(io::to_json(io::graph_from_json(j))) == io::digest(j));
  }
  for (const std::string& name : datasets::example_names()) {
    const MonomialIdeal i = datasets::example(name).ideal;
    CHECK(io::ideal_from_json(io::parse(io::to_json(i).dump())) == i);
  }
}
