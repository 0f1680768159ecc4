#include "onion/generators.hpp"

#include <cassert>
#include <cmath>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace onion {

namespace {

struct KindName {
  GenKind kind;
  const char* name;
};

constexpr KindName kKinds[] = {
    {GenKind::UniformSquare, "uniform-square"},
    {GenKind::UniformDisk, "uniform-disk"},
    {GenKind::Circle, "circle"},
    {GenKind::Grid, "grid"},
    {GenKind::Collinear, "collinear"},
    {GenKind::NestedRings, "nested-rings"},
    {GenKind::Fixture, "fixture"},
};

[[noreturn]] void badN(const std::string& why) { throw std::invalid_argument(why); }

std::vector<Point> uniform(int64_t n, uint64_t seed, bool disk, const GenOptions& opt) {
  if (n < 1) badN("n must be positive");
  std::mt19937_64 rng(seed);
  const Coord lim = kCoordLimit - 1;
  std::uniform_int_distribution<Coord> dist(-lim, lim);
  std::unordered_set<Coord> usedX, usedY;
  std::unordered_set<uint64_t> usedPt;
  std::vector<Point> pts;
  pts.reserve(static_cast<size_t>(n));
  while (pts.size() < static_cast<size_t>(n)) {
    Coord x = dist(rng), y = dist(rng);
    if (disk) {
      if (I128(x) * x + I128(y) * y > I128(lim) * lim) continue;
    }
    if (opt.generalPosition) {
      if (usedX.count(x) || usedY.count(y)) continue;
      usedX.insert(x);
      usedY.insert(y);
    } else {
      uint64_t key = (uint64_t(uint32_t(x)) << 32) | uint32_t(y);
      if (!usedPt.insert(key).second) continue;
    }
    pts.push_back(Point{x, y, static_cast<int32_t>(pts.size())});
  }
  return pts;
}

std::vector<Point> circle(int64_t n, uint64_t seed) {
  if (n < 1) badN("n must be positive");
  const double phase = double(seed % 997) * (2.0 * M_PI / 997.0);
  for (Coord radius = 500'000'000; radius <= 1'000'000'000; radius *= 2) {
    std::vector<Point> pts;
    pts.reserve(static_cast<size_t>(n));
    std::unordered_set<uint64_t> seen;
    bool ok = true;
    for (int64_t i = 0; i < n && ok; ++i) {
      double a = phase + 2.0 * M_PI * double(i) / double(n);
      Coord x = llround(double(radius) * std::cos(a));
      Coord y = llround(double(radius) * std::sin(a));
      uint64_t key = (uint64_t(uint32_t(x)) << 32) | uint32_t(y);
      if (!seen.insert(key).second) ok = false;
      pts.push_back(Point{x, y, static_cast<int32_t>(i)});
    }
    if (ok) return pts;
  }
  badN("n too large for distinct circle points");
}

std::vector<Point> grid(int64_t n, uint64_t seed) {
  int64_t side = llround(std::sqrt(double(n)));
  if (side < 1 || side * side != n) badN("grid wants n to be a perfect square");
  const Coord s = 997 + Coord(seed % 7) * 13;
  const Coord o = -(side / 2) * s;
  std::vector<Point> pts;
  pts.reserve(static_cast<size_t>(n));
  for (int64_t j = 0; j < side; ++j)
    for (int64_t i = 0; i < side; ++i)
      pts.push_back(Point{o + i * s, o + j * s, static_cast<int32_t>(pts.size())});
  return pts;
}

std::vector<Point> collinear(int64_t n, uint64_t seed) {
  if (n < 1) badN("n must be positive");
  static constexpr Coord dirs[][2] = {{1, 0}, {0, 1}, {1, 1}, {1, -1}, {2, 1}, {1, 2}};
  const auto& d = dirs[seed % 6];
  std::mt19937_64 rng(seed);
  std::vector<Point> pts;
  pts.reserve(static_cast<size_t>(n));
  Coord t = -2 * n;
  for (int64_t i = 0; i < n; ++i) {
    pts.push_back(Point{t * d[0], t * d[1], static_cast<int32_t>(i)});
    t += 1 + Coord(rng() % 3);
  }
  for (const Point& p : pts)
    if (!coordInRange(p.x) || !coordInRange(p.y)) badN("n too large for collinear line");
  return pts;
}

std::vector<Point> nestedRings(int64_t n, uint64_t /*seed*/) {
  if (n < 8 || n % 8 != 0) badN("nested-rings wants n to be a positive multiple of 8");
  const int64_t rings = n / 8;
  const Coord rmax = 1'000'000'000, rmin = 1000;
  const Coord step = (rmax - rmin) / rings;
  if (step < 2) badN("n too large for nested-rings");
  std::vector<Point> pts;
  pts.reserve(static_cast<size_t>(n));
  for (int64_t j = 0; j < rings; ++j) {
    const Coord r = rmax - j * step;
    const Coord c = llround(double(r) * 0.70710678118654752440);
    const Coord ring[8][2] = {{r, 0},  {c, c},   {0, r},  {-c, c},
                              {-r, 0}, {-c, -c}, {0, -r}, {c, -c}};
    for (const auto& v : ring)
      pts.push_back(Point{v[0], v[1], static_cast<int32_t>(pts.size())});
  }
  return pts;
}

}  // namespace

std::optional<GenKind> parseGenKind(std::string_view name) {
  for (const auto& k : kKinds)
    if (name == k.name) return k.kind;
  return std::nullopt;
}

const char* genKindName(GenKind k) {
  for (const auto& kn : kKinds)
    if (kn.kind == k) return kn.name;
  return "?";
}

std::vector<std::string> genKindNames() {
  std::vector<std::string> out;
  for (const auto& k : kKinds) out.emplace_back(k.name);
  return out;
}

std::vector<Point> fixturePoints() {
  static constexpr Coord raw[][2] = {{-100, 0}, {0, 100}, {10, 99}, {100, -3},
                                     {5, -100}, {-50, 5}, {20, 50}, {25, 52},
                                     {30, 4},   {-2, -50}};
  std::vector<Point> pts;
  for (size_t i = 0; i < 10; ++i)
    pts.push_back(Point{raw[i][0], raw[i][1], static_cast<int32_t>(i)});
  return pts;
}

std::vector<Point> generate(GenKind kind, int64_t n, uint64_t seed,
                            const GenOptions& opt) {
  switch (kind) {
    case GenKind::UniformSquare: return uniform(n, seed, false, opt);
    case GenKind::UniformDisk: return uniform(n, seed, true, opt);
    case GenKind::Circle: return circle(n, seed);
    case GenKind::Grid: return grid(n, seed);
    case GenKind::Collinear: return collinear(n, seed);
    case GenKind::NestedRings: return nestedRings(n, seed);
    case GenKind::Fixture:
      if (n != 10) badN("fixture has exactly 10 points");
      return fixturePoints();
  }
  badN("unknown generator kind");
}

}  // namespace onion
