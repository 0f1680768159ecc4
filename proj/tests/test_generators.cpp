#include <set>
#include <stdexcept>

#include <doctest.h>

#include "onion/generators.hpp"
#include "onion/oracle.hpp"

using namespace onion;

TEST_CASE("kind names round-trip") {
  for (const auto& name : genKindNames()) {
    auto k = parseGenKind(name);
    REQUIRE(k.has_value());
    CHECK(genKindName(*k) == name);
  }
  CHECK_FALSE(parseGenKind("banana").has_value());
}

TEST_CASE("instances are deterministic, duplicate-free and in range") {
  struct Case {
    GenKind kind;
    int64_t n;
  };
  for (auto [kind, n] : {Case{GenKind::UniformSquare, 200},
                         Case{GenKind::UniformDisk, 200},
                         Case{GenKind::Circle, 37},
                         Case{GenKind::Grid, 49},
                         Case{GenKind::Collinear, 23},
                         Case{GenKind::NestedRings, 40},
                         Case{GenKind::Fixture, 10}}) {
    auto a = generate(kind, n, 99);
    auto b = generate(kind, n, 99);
    CHECK(a == b);
    CHECK(static_cast<int64_t>(a.size()) == n);
    std::set<std::pair<Coord, Coord>> seen;
    for (size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].id == static_cast<int32_t>(i));
      CHECK(coordInRange(a[i].x));
      CHECK(coordInRange(a[i].y));
      CHECK(seen.emplace(a[i].x, a[i].y).second);
    }
    if (kind == GenKind::UniformSquare || kind == GenKind::UniformDisk) {
      auto c = generate(kind, n, 100);
      CHECK(a != c);
    }
  }
}

TEST_CASE("general position means no shared abscissa or ordinate") {
  auto pts = generate(GenKind::UniformSquare, 500, 5);
  std::set<Coord> xs, ys;
  for (const auto& p : pts) {
    CHECK(xs.insert(p.x).second);
    CHECK(ys.insert(p.y).second);
  }
}

TEST_CASE("circle points are all extreme") {
  auto pts = generate(GenKind::Circle, 12, 3);
  CHECK(pts.size() == 12);
  auto layers = oracle::peel(pts);
  CHECK(layers.size() == 1);
  CHECK(layers[0].size() == 12);
}

TEST_CASE("nested rings peel ring by ring") {
  auto pts = generate(GenKind::NestedRings, 24, 8);
  auto layers = oracle::peel(pts);
  REQUIRE(layers.size() == 3);
  for (const auto& L : layers) CHECK(L.size() == 8);
}

TEST_CASE("grid layers match the oracle shape") {
  auto pts = generate(GenKind::Grid, 16, 0);
  auto layers = oracle::peel(pts);
  // vertex-strict peeling of a 4x4 grid: the edge midpoints of the outer
  // square sit on hull edges, so layer 1 is the 4 corners, layer 2 the
  // 8-point octagon they expose, layer 3 the inner 2x2 square
  REQUIRE(layers.size() == 3);
  CHECK(layers[0].size() == 4);
  CHECK(layers[1].size() == 8);
  CHECK(layers[2].size() == 4);
}

TEST_CASE("infeasible sizes are rejected") {
  CHECK_THROWS_AS(generate(GenKind::Grid, 10, 0), std::invalid_argument);
  CHECK_THROWS_AS(generate(GenKind::NestedRings, 12, 0), std::invalid_argument);
  CHECK_THROWS_AS(generate(GenKind::NestedRings, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(generate(GenKind::Fixture, 9, 0), std::invalid_argument);
  CHECK_THROWS_AS(generate(GenKind::UniformSquare, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(generate(GenKind::Collinear, -3, 0), std::invalid_argument);
}

TEST_CASE("fixture generator returns the documented ten points") {
  auto pts = generate(GenKind::Fixture, 10, 123);
  CHECK(pts == fixturePoints());
  REQUIRE(pts.size() == 10);
  CHECK(pts[6] == Point{20, 50, 6});
}
