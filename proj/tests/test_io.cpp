#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "onion/generators.hpp"
#include "onion/io.hpp"

using namespace onion;

namespace {

std::vector<Point> parse(const std::string& text, int scale = 0) {
  std::istringstream in(text);
  return io::readPoints(in, scale);
}

std::string thrownWhat(const std::string& text, int scale = 0) {
  try {
    parse(text, scale);
  } catch (const io::ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("basic point file") {
  auto pts = parse("3,4\n-2,7\n0,0\n");
  REQUIRE(pts.size() == 3);
  CHECK(pts[0] == Point{3, 4, 0});
  CHECK(pts[1] == Point{-2, 7, 1});
  CHECK(pts[2] == Point{0, 0, 2});
}

TEST_CASE("header, comments, blanks, and spacing") {
  auto pts = parse("x,y\n# corner points\n\n  1 , 2  # inline note\n+3,-4\n");
  REQUIRE(pts.size() == 2);
  CHECK(pts[0] == Point{1, 2, 0});
  CHECK(pts[1] == Point{3, -4, 1});
  // the header is only special on the first data line
  CHECK(thrownWhat("1,2\nx,y\n") != "");
}

TEST_CASE("scaling is exact, never rounded") {
  auto pts = parse("1.25,-0.5\n2,0.07\n", 2);
  REQUIRE(pts.size() == 2);
  CHECK(pts[0] == Point{125, -50, 0});
  CHECK(pts[1] == Point{200, 7, 1});

  // trailing zeros past the scale are harmless; nonzero digits are not
  CHECK(parse("1.250,3\n", 2)[0].x == 125);
  auto msg = thrownWhat("1.234,0\n", 2);
  CHECK(msg.find("refusing to round") != std::string::npos);

  // decimals without a scale are refused outright
  auto noScale = thrownWhat("1.5,0\n");
  CHECK(noScale.find("needs --scale") != std::string::npos);
  CHECK(parse("1.00,2\n")[0].x == 1);  // all-zero fraction is still exact
}

TEST_CASE("scale bounds") {
  CHECK_THROWS_AS(parse("1,2\n", -1), io::ParseError);
  CHECK_THROWS_AS(parse("1,2\n", 10), io::ParseError);
  CHECK(parse("0.000000001,0\n", 9)[0].x == 1);
}

TEST_CASE("malformed lines carry their line number") {
  CHECK(thrownWhat("1,2\nnope\n").find("line 2") != std::string::npos);
  CHECK(thrownWhat("5\n").find("expected 'x,y'") != std::string::npos);
  CHECK(thrownWhat("1,2,3\n").find("exactly one comma") != std::string::npos);
  CHECK(thrownWhat("a,2\n").find("malformed number") != std::string::npos);
  CHECK(thrownWhat("--5,2\n").find("malformed number") != std::string::npos);
  CHECK(thrownWhat(".,2\n").find("malformed number") != std::string::npos);
}

TEST_CASE("duplicate coordinates name both ids") {
  auto msg = thrownWhat("0,0\n5,5\n0,0\n");
  CHECK(msg.find("duplicate point (0,0)") != std::string::npos);
  CHECK(msg.find("ids 0 and 2") != std::string::npos);
  // a scaled collision counts too
  CHECK(thrownWhat("1.0,2\n1,2\n", 1).find("duplicate") != std::string::npos);
}

TEST_CASE("coordinate range enforcement") {
  const Coord lim = kCoordLimit;
  auto edge = parse(std::to_string(lim) + "," + std::to_string(-lim) + "\n");
  CHECK(edge[0].x == lim);
  CHECK(edge[0].y == -lim);
  CHECK(thrownWhat(std::to_string(lim + 1) + ",0\n").find("bound") !=
        std::string::npos);
  CHECK(thrownWhat("99999999999999999999,0\n").find("overflows") !=
        std::string::npos);
  CHECK(thrownWhat("-2000000000,0\n", 0).find("bound") != std::string::npos);
  // in range before scaling, out of range after
  CHECK(thrownWhat("1073741.825,0\n", 3).find("after scaling") !=
        std::string::npos);
}

TEST_CASE("write then read round-trips") {
  auto pts = generate(GenKind::UniformSquare, 120, 9);
  std::ostringstream out;
  io::writePoints(out, pts);
  auto back = parse(out.str());
  CHECK(back == pts);
  // format is bare "x,y" lines
  CHECK(out.str().substr(0, out.str().find('\n')).find(',') !=
        std::string::npos);
  CHECK(out.str().find('#') == std::string::npos);
}

TEST_CASE("file helpers") {
  const std::string path = "/tmp/onion_io_test_points.csv";
  auto pts = generate(GenKind::Circle, 9, 4);
  io::writePointsFile(path, pts);
  CHECK(io::readPointsFile(path) == pts);
  std::remove(path.c_str());

  try {
    io::readPointsFile("/nonexistent/nowhere.csv");
    CHECK(false);
  } catch (const io::ParseError& e) {
    CHECK(std::string(e.what()).find("/nonexistent/nowhere.csv") !=
          std::string::npos);
  }
  CHECK_THROWS_AS(io::writePointsFile("/nonexistent/out.csv", pts),
                  io::ParseError);

  // file-level errors are prefixed with the path
  {
    std::ofstream bad(path);
    bad << "1,2\noops\n";
  }
  try {
    io::readPointsFile(path);
    CHECK(false);
  } catch (const io::ParseError& e) {
    std::string w = e.what();
    CHECK(w.find(path) == 0);
    CHECK(w.find("line 2") != std::string::npos);
  }
  std::remove(path.c_str());
}

TEST_CASE("empty input reads as no points") {
  CHECK(parse("").empty());
  CHECK(parse("# only a comment\n\n").empty());
  CHECK(parse("x,y\n").empty());
}
