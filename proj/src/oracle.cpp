#include "onion/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_set>

namespace onion::oracle {

static std::vector<Point> hullOfSorted(const std::vector<Point>& pts) {
  const size_t n = pts.size();
  if (n <= 2) return pts;
  std::vector<Point> lower, upper;
  for (const Point& p : pts) {
    while (lower.size() >= 2 &&
           orientation(lower[lower.size() - 2], lower.back(), p) <= 0)
      lower.pop_back();
    lower.push_back(p);
  }
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
    while (upper.size() >= 2 &&
           orientation(upper[upper.size() - 2], upper.back(), *it) <= 0)
      upper.pop_back();
    upper.push_back(*it);
  }
  lower.pop_back();
  upper.pop_back();
  lower.insert(lower.end(), upper.begin(), upper.end());
  return lower;
}

std::vector<Point> hullCycle(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), xKeyLess);
  return hullOfSorted(pts);
}

std::vector<Point> nwChain(const std::vector<Point>& pts) {
  std::vector<Point> cycle = hullCycle(pts);
  const size_t m = cycle.size();
  if (m == 0) return {};
  size_t hi = 0, ti = 0;
  for (size_t i = 1; i < m; ++i) {
    const Point& p = cycle[i];
    const Point& h = cycle[hi];
    if (p.x < h.x || (p.x == h.x && p.y > h.y)) hi = i;
    const Point& t = cycle[ti];
    if (p.y > t.y || (p.y == t.y && p.x < t.x)) ti = i;
  }
  // Clockwise walk on a counterclockwise cycle steps backwards.
  std::vector<Point> chain;
  for (size_t i = hi;; i = (i + m - 1) % m) {
    chain.push_back(cycle[i]);
    if (i == ti) break;
  }
  return chain;
}

std::vector<std::vector<Point>> peel(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), xKeyLess);
  std::vector<std::vector<Point>> layers;
  while (!pts.empty()) {
    std::vector<Point> hull = hullOfSorted(pts);
    std::unordered_set<int32_t> onHull;
    for (const Point& p : hull) onHull.insert(p.id);
    std::vector<Point> rest;
    rest.reserve(pts.size() - hull.size());
    for (const Point& p : pts)
      if (!onHull.count(p.id)) rest.push_back(p);
    layers.push_back(std::move(hull));
    pts = std::move(rest);
  }
  return layers;
}

BridgeResult bridge(const std::vector<Point>& L, const std::vector<Point>& R) {
  assert(!L.empty() && !R.empty());
  assert(L.back().x < R.front().x);
  std::unordered_set<int32_t> fromR;
  for (const Point& p : R) fromR.insert(p.id);
  std::vector<Point> both = L;
  both.insert(both.end(), R.begin(), R.end());
  std::vector<Point> merged = nwChain(both);
  assert(!merged.empty() && !fromR.count(merged.front().id));
  BridgeResult res;
  for (size_t i = 1; i < merged.size(); ++i) {
    if (fromR.count(merged[i].id)) {
      res.l = merged[i - 1];
      res.r = merged[i];
      return res;
    }
  }
  res.rightEmpty = true;
  return res;
}

std::pair<Point, Point> tangentCandidates(const std::vector<Point>& chainPts,
                                          const ExtPoint& pivot) {
  assert(!chainPts.empty());
  const Point* lo = nullptr;
  const Point* hi = nullptr;
  for (const Point& v : chainPts) {
    bool roof = true;
    for (const Point& w : chainPts) {
      if (above(extFinite(v), pivot, extFinite(w))) {
        roof = false;
        break;
      }
    }
    if (!roof) continue;
    if (!lo || xKeyLess(v, *lo)) lo = &v;
    if (!hi || xKeyLess(*hi, v)) hi = &v;
  }
  assert(lo && hi);
  return {*lo, *hi};
}

}  // namespace onion::oracle
