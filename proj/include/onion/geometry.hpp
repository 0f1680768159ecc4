#pragma once

#include <cassert>
#include <cstdint>
#include <iosfwd>
#include <utility>

namespace onion {

using Coord = int64_t;
using I128 = __int128;

inline constexpr Coord kCoordLimit = Coord{1} << 30;

inline bool coordInRange(Coord v) { return v >= -kCoordLimit && v <= kCoordLimit; }

struct Point {
  Coord x = 0;
  Coord y = 0;
  int32_t id = -1;
  friend bool operator==(const Point&, const Point&) = default;
};

// (x, y) lexicographic; also the rank order.
inline bool xKeyLess(const Point& a, const Point& b) {
  return a.x != b.x ? a.x < b.x : a.y < b.y;
}

// (y, x) lexicographic; the insertion order when building a tree.
inline bool yKeyLess(const Point& a, const Point& b) {
  return a.y != b.y ? a.y < b.y : a.x < b.x;
}

inline int sgn(I128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Sign of the cross product (q-p) x (r-p): +1 = counterclockwise turn,
// -1 = clockwise turn, 0 = collinear.
inline int orientation(const Point& p, const Point& q, const Point& r) {
  I128 lhs = I128(q.x - p.x) * I128(r.y - p.y);
  I128 rhs = I128(q.y - p.y) * I128(r.x - p.x);
  return sgn(lhs - rhs);
}

// A coordinate of the form a*W + b where W is a symbolic value larger than any
// finite coordinate and a is -1, 0 or +1.  Sentinel endpoints of chains use
// infinite components; all real points have a == 0.
struct SymCoord {
  int32_t inf = 0;  // coefficient of W
  Coord fin = 0;    // finite part
};

inline bool symEq(SymCoord a, SymCoord b) { return a.inf == b.inf && a.fin == b.fin; }
inline bool symLess(SymCoord a, SymCoord b) {
  return a.inf != b.inf ? a.inf < b.inf : a.fin < b.fin;
}

struct ExtPoint {
  SymCoord x;
  SymCoord y;
};

inline ExtPoint extFinite(Coord x, Coord y) { return {{0, x}, {0, y}}; }
inline ExtPoint extFinite(const Point& p) { return extFinite(p.x, p.y); }
// Left frame point of a chain whose head has abscissa headX: (headX, -W).
inline ExtPoint extBelowSentinel(Coord headX) { return {{0, headX}, {-1, 0}}; }
// Right frame point of a chain whose tail has ordinate tailY: (+W, tailY).
inline ExtPoint extRightSentinel(Coord tailY) { return {{1, 0}, {0, tailY}}; }

inline bool extEq(const ExtPoint& a, const ExtPoint& b) {
  return symEq(a.x, b.x) && symEq(a.y, b.y);
}

// (x, y) lexicographic over symbolic coordinates.
inline bool sweepLess(const ExtPoint& a, const ExtPoint& b) {
  if (!symEq(a.x, b.x)) return symLess(a.x, b.x);
  return symLess(a.y, b.y);
}

// Sign of (q-p) x (r-p) where coordinates are degree-1 polynomials in W; the
// cross product is a degree-2 polynomial whose sign for large W is the sign of
// its leading nonzero coefficient.
inline int orientationExt(const ExtPoint& p, const ExtPoint& q, const ExtPoint& r) {
  int32_t ax = q.x.inf - p.x.inf, ay = q.y.inf - p.y.inf;
  int32_t bx = r.x.inf - p.x.inf, by = r.y.inf - p.y.inf;
  Coord cx = q.x.fin - p.x.fin, cy = q.y.fin - p.y.fin;
  Coord dx = r.x.fin - p.x.fin, dy = r.y.fin - p.y.fin;
  I128 w2 = I128(ax) * by - I128(ay) * bx;
  I128 w1 = I128(ax) * dy + I128(cx) * by - I128(ay) * dx - I128(cy) * bx;
  I128 w0 = I128(cx) * dy - I128(cy) * dx;
  if (w2 != 0) return sgn(w2);
  if (w1 != 0) return sgn(w1);
  return sgn(w0);
}

inline bool collinearExt(const ExtPoint& p, const ExtPoint& q, const ExtPoint& r) {
  return orientationExt(p, q, r) == 0;
}

// Sign of slope(a->b) - slope(c->d) for directions that do not point leftward
// (symbolic dx >= 0); a vertical direction compares as +infinity.  Computed as
// the cross product of the two direction vectors, a degree-2 polynomial in W.
inline int slopeCompareExt(const ExtPoint& a, const ExtPoint& b,
                           const ExtPoint& c, const ExtPoint& d) {
  int32_t x1i = b.x.inf - a.x.inf, y1i = b.y.inf - a.y.inf;
  Coord x1f = b.x.fin - a.x.fin, y1f = b.y.fin - a.y.fin;
  int32_t x2i = d.x.inf - c.x.inf, y2i = d.y.inf - c.y.inf;
  Coord x2f = d.x.fin - c.x.fin, y2f = d.y.fin - c.y.fin;
  I128 w2 = I128(y1i) * x2i - I128(y2i) * x1i;
  I128 w1 = I128(y1i) * x2f + I128(y1f) * x2i - I128(y2i) * x1f - I128(y2f) * x1i;
  I128 w0 = I128(y1f) * x2f - I128(y2f) * x1f;
  if (w2 != 0) return sgn(w2);
  if (w1 != 0) return sgn(w1);
  return sgn(w0);
}

// True when r lies strictly above the line through p and q.  For a vertical
// line "above" means strictly to the left.  p and q are first normalized into
// sweep order, which fixes the orientation of the line consistently; the two
// representable coincident-sentinel pairs are resolved by the direction in
// which their hidden magnitudes diverge.
inline bool above(ExtPoint p, ExtPoint q, const ExtPoint& r) {
  if (extEq(p, q)) {
    if (p.y.inf == -1) {
      // Two below-sentinels sharing an abscissa: a vertical line.
      return symLess(r.x, p.x);
    }
    assert(p.x.inf == 1);
    // Two right-sentinels sharing an ordinate: a horizontal line.
    return symLess(p.y, r.y);
  }
  if (sweepLess(q, p)) std::swap(p, q);
  return orientationExt(p, q, r) > 0;
}

std::ostream& operator<<(std::ostream& os, const Point& p);
std::ostream& operator<<(std::ostream& os, const ExtPoint& p);

}  // namespace onion
