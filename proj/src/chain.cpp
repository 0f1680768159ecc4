#include "onion/chain.hpp"

#include <sstream>

namespace onion {

bool dominates(const std::vector<Point>& chainPts, const Point& r) {
  const size_t n = chainPts.size();
  if (n == 0) return false;
  for (const Point& p : chainPts)
    if (p.id == r.id) return false;
  if (r.x < chainPts.front().x) return false;
  for (size_t i = 0; i + 1 < n; ++i) {
    if (chainPts[i].x <= r.x && r.x <= chainPts[i + 1].x)
      return orientation(chainPts[i], chainPts[i + 1], r) <= 0;
  }
  return r.x >= chainPts.back().x && r.y <= chainPts.back().y;
}

bool dominates(const Chain& c, const Point& r) {
  if (c.empty()) return false;
  for (const ChainNode* v = c.head(); v != c.rightSentinel(); v = v->next)
    if (v->id == r.id) return false;
  if (r.x < c.head()->x) return false;
  for (const ChainNode* v = c.head(); v != c.tail(); v = v->next) {
    const ChainNode* w = v->next;
    if (v->x <= r.x && r.x <= w->x)
      return orientation(v->point(), w->point(), r) <= 0;
  }
  return r.x >= c.tail()->x && r.y <= c.tail()->y;
}

static ChainCheck fail(const char* code, const std::string& detail) {
  return ChainCheck{false, code, detail};
}

ChainCheck validateChain(const Chain& c) {
  const ChainNode* ls = c.belowSentinel();
  const ChainNode* rs = c.rightSentinel();
  if (ls->kind != NodeKind::BelowSentinel || rs->kind != NodeKind::RightSentinel)
    return fail("sentinel", "frame nodes have wrong kinds");
  int64_t reals = 0;
  int64_t steps = 0;
  for (const ChainNode* v = ls; v != rs; v = v->next) {
    if (!v->next || v->next->prev != v)
      return fail("links", "broken forward/backward link");
    if (v != ls && !v->real()) return fail("sentinel", "interior node is not real");
    if (v != ls) ++reals;
    if (++steps > c.size() + 2) return fail("links", "walk does not terminate");
  }
  if (reals != c.size())
    return fail("count", "size " + std::to_string(c.size()) + " but walked " +
                             std::to_string(reals));
  for (const ChainNode* v = c.head(); v && v != c.tail(); v = v->next) {
    const ChainNode* w = v->next;
    if (!(v->x < w->x && v->y < w->y)) {
      std::ostringstream os;
      os << "nodes " << v->point() << " then " << w->point();
      return fail("monotonicity", os.str());
    }
  }
  for (const ChainNode* v = c.head(); v && v != c.tail() && v->next != c.tail();
       v = v->next) {
    if (orientation(v->point(), v->next->point(), v->next->next->point()) != -1) {
      std::ostringstream os;
      os << "triple at " << v->next->point();
      return fail("convexity", os.str());
    }
  }
  return ChainCheck{};
}

}  // namespace onion
