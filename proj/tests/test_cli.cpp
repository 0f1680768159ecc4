#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "onion/cli.hpp"

namespace {

struct CliResult {
  int rc = 0;
  std::string out, err;
};

CliResult cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"onion"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliResult r;
  r.rc = onion::runCli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

size_t countSub(const std::string& hay, const std::string& needle) {
  size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos;
       pos = hay.find(needle, pos + needle.size()))
    ++n;
  return n;
}

size_t countLines(const std::string& s) {
  return countSub(s, "\n");
}

const char* kSquarePath = "/tmp/onion_cli_square.csv";

void writeSquareFile() {
  std::ofstream f(kSquarePath);
  f << "0,0\n10,1\n9,11\n-1,10\n5,5\n";
}

}  // namespace

TEST_CASE("compute json on a small file") {
  writeSquareFile();
  auto r = cli({"compute", "--input", kSquarePath});
  REQUIRE(r.rc == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["n"] == 5);
  CHECK(j["k"] == 2);
  REQUIRE(j["layers"].size() == 2);
  CHECK(j["layers"][0].size() == 4);
  CHECK(j["layers"][1].size() == 1);
  CHECK(j["layers"][1][0] == nlohmann::json({5, 5}));
  CHECK(j["layers"][0][0] == nlohmann::json({-1, 10}));  // lex-min first
  std::remove(kSquarePath);
}

TEST_CASE("compute csv") {
  writeSquareFile();
  auto r = cli({"compute", "--input", kSquarePath, "--format", "csv"});
  REQUIRE(r.rc == 0);
  CHECK(r.out.rfind("layer,idx,x,y\n", 0) == 0);
  CHECK(countLines(r.out) == 6);  // header plus one row per point
  CHECK(r.out.find("1,0,-1,10\n") != std::string::npos);
  CHECK(r.out.find("2,0,5,5\n") != std::string::npos);
  std::remove(kSquarePath);
}

TEST_CASE("compute fixture in both merge modes") {
  auto purge = cli({"compute", "--input", "fixture"});
  REQUIRE(purge.rc == 0);
  auto jp = nlohmann::json::parse(purge.out);
  CHECK(jp["n"] == 10);
  CHECK(jp["k"] == 2);
  CHECK(jp["layers"][0].size() == 5);
  CHECK(jp["layers"][1].size() == 5);

  auto lit = cli({"compute", "--input", "fixture", "--mode", "literal"});
  REQUIRE(lit.rc == 0);
  auto jl = nlohmann::json::parse(lit.out);
  CHECK(jl["k"] == 3);
  CHECK(jl["layers"][2] == nlohmann::json({{20, 50}}));
}

TEST_CASE("compute respects the layer cap") {
  auto r = cli({"compute", "--input", "fixture", "--max-layers", "1"});
  REQUIRE(r.rc == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["k"] == 1);
  CHECK(j["layers"][0].size() == 5);
}

TEST_CASE("compute scale folds decimals exactly") {
  const char* path = "/tmp/onion_cli_scaled.csv";
  {
    std::ofstream f(path);
    f << "0.5,0.5\n2.5,0.5\n2.5,2.5\n0.5,2.5\n1.5,1.5\n";
  }
  auto r = cli({"compute", "--input", path, "--scale", "1"});
  REQUIRE(r.rc == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["k"] == 2);
  CHECK(j["layers"][1][0] == nlohmann::json({15, 15}));
  auto bad = cli({"compute", "--input", path});
  CHECK(bad.rc == 2);
  CHECK(bad.err.find("refusing to round") != std::string::npos);
  std::remove(path);
}

TEST_CASE("verify a generated workload") {
  auto r = cli({"verify", "--gen", "uniform-square", "--n", "64", "--trials",
                "3", "--seed", "7"});
  CHECK(r.rc == 0);
  CHECK(r.out.find("verify OK") != std::string::npos);
  CHECK(r.out.find("3 trial(s)") != std::string::npos);

  auto col = cli({"verify", "--gen", "collinear", "--n", "9"});
  CHECK(col.rc == 0);
}

TEST_CASE("verify the fixture: purge matches, literal does not") {
  auto ok = cli({"verify", "--input", "fixture"});
  CHECK(ok.rc == 0);
  CHECK(ok.out.find("verify OK") != std::string::npos);

  auto bad = cli({"verify", "--input", "fixture", "--mode", "literal"});
  CHECK(bad.rc == 1);
  CHECK(bad.out.find("verify FAILED") != std::string::npos);
  CHECK(bad.out.find("(20,50)") != std::string::npos);
  CHECK(bad.out.find("minimized instance") != std::string::npos);
}

TEST_CASE("verify wants exactly one source") {
  CHECK(cli({"verify"}).rc == 2);
  writeSquareFile();
  CHECK(cli({"verify", "--input", kSquarePath, "--gen", "circle", "--n", "5"})
            .rc == 2);
  std::remove(kSquarePath);
}

TEST_CASE("gen writes points to stdout or a file") {
  auto r = cli({"gen", "--kind", "circle", "--n", "12", "--seed", "3"});
  REQUIRE(r.rc == 0);
  CHECK(countLines(r.out) == 12);

  const char* path = "/tmp/onion_cli_gen.csv";
  auto f = cli({"gen", "--kind", "nested-rings", "--n", "24", "--out", path});
  REQUIRE(f.rc == 0);
  CHECK(f.out.empty());
  auto comp = cli({"compute", "--input", path});
  REQUIRE(comp.rc == 0);
  auto j = nlohmann::json::parse(comp.out);
  CHECK(j["k"] == 3);
  std::remove(path);

  // the fixture kind defaults to its natural size
  auto fix = cli({"gen", "--kind", "fixture"});
  REQUIRE(fix.rc == 0);
  CHECK(countLines(fix.out) == 10);
}

TEST_CASE("bench smoke") {
  auto few = cli({"bench", "--gen", "uniform-square", "--sizes", "32,64,128"});
  REQUIRE(few.rc == 0);
  CHECK(few.out.find("n,wall_ms,layers") != std::string::npos);
  CHECK(few.out.find("needs at least four sizes") != std::string::npos);
  CHECK(countSub(few.err, "# n=") == 3);

  auto ladder =
      cli({"bench", "--gen", "uniform-square", "--sizes", "2^5..2^8"});
  REQUIRE(ladder.rc == 0);
  CHECK(ladder.out.find("ratio range") != std::string::npos);

  auto brute = cli({"bench", "--gen", "circle", "--sizes", "16", "--algo",
                    "bruteforce"});
  REQUIRE(brute.rc == 0);
  CHECK(brute.out.find("not applicable to the bruteforce reference") !=
        std::string::npos);
  CHECK(brute.out.find("16,") != std::string::npos);

  CHECK(cli({"bench", "--sizes", "0"}).rc == 2);
  CHECK(cli({"bench", "--sizes", "3^4"}).rc == 2);
  CHECK(cli({"bench", "--sizes", "64..32"}).rc == 2);
}

TEST_CASE("plot renders one polygon per big-enough layer") {
  const char* path = "/tmp/onion_cli_plot.svg";
  auto r = cli({"plot", "--input", "fixture", "--out", path});
  REQUIRE(r.rc == 0);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  auto svg = buf.str();
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(countSub(svg, "<polygon") == 2);
  CHECK(countSub(svg, "<circle") == 10);
  std::remove(path);

  writeSquareFile();
  auto sq = cli({"plot", "--input", kSquarePath, "--out", path});
  REQUIRE(sq.rc == 0);
  std::ifstream in2(path);
  std::stringstream buf2;
  buf2 << in2.rdbuf();
  CHECK(countSub(buf2.str(), "<polygon") == 1);  // the inner point has none
  std::remove(path);
  std::remove(kSquarePath);
}

TEST_CASE("exit codes") {
  CHECK(cli({"compute", "--input", "/no/such/file.csv"}).rc == 2);
  CHECK(cli({}).rc == 2);                              // subcommand required
  CHECK(cli({"compute"}).rc == 2);                     // --input required
  CHECK(cli({"compute", "--input", "fixture", "--mode", "half"}).rc == 2);
  CHECK(cli({"frobnicate"}).rc == 2);
  CHECK(cli({"compute", "--bogus-flag"}).rc == 2);
  CHECK(cli({"gen", "--kind", "grid", "--n", "10"}).rc == 2);  // not a square
  CHECK(cli({"plot", "--input", "fixture", "--out", "/no/such/dir/x.svg"}).rc ==
        2);

  const char* path = "/tmp/onion_cli_bad.csv";
  {
    std::ofstream f(path);
    f << "1,2\nbroken line\n";
  }
  auto bad = cli({"compute", "--input", path});
  CHECK(bad.rc == 2);
  CHECK(bad.err.find("line 2") != std::string::npos);
  std::remove(path);

  auto help = cli({"--help"});
  CHECK(help.rc == 0);
  CHECK(help.out.find("compute") != std::string::npos);
  CHECK(help.out.find("verify") != std::string::npos);
}
