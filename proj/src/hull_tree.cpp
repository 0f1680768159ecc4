#include "onion/hull_tree.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace onion {

std::string ScanCounters::toText() const {
  std::ostringstream os;
  os << "scanEvents=" << scanEvents << "\nevictions=" << evictions
     << "\npromotions=" << promotions << "\ninsertCalls=" << insertCalls
     << "\ndeleteCalls=" << deleteCalls << "\n";
  return os.str();
}

namespace ht {

int cmpPos(const ChainNode* a, const ChainNode* b) {
  auto key = [](const ChainNode* v) {
    if (v->kind == NodeKind::BelowSentinel) return 0;
    return v->real() ? 1 : 2;
  };
  const int ka = key(a), kb = key(b);
  if (ka != kb) return ka < kb ? -1 : 1;
  if (ka != 1 || a == b) return 0;
  if (a->x != b->x) return a->x < b->x ? -1 : 1;
  return 0;
}

static ChainNode* clampReal(Chain& h, ChainNode* v) {
  if (v->real()) return v;
  return v->kind == NodeKind::BelowSentinel ? h.head() : h.tail();
}

bool belowQuery(TreeNode* t, const Pivot& pl, const Pivot& pr, ScanCounters& sc) {
  if (!t || t->hull.empty()) return true;
  if (!pl.hasVal || !pr.hasVal) return false;
  Chain& h = t->hull;
  t->l = clampReal(h, t->l);
  t->r = clampReal(h, t->r);
  // The vertical gap between chain and chord is concave in the vertex index
  // and peaks where the edge slopes cross the chord slope, so a local ascent
  // from either cursor decides the query.  Edge slopes decrease rightward:
  // while the edge entering t->r is steeper than the chord the peak lies at or
  // right of it, and t->l advances; otherwise t->r retreats.
  if (slopeCompareExt(extValOf(t->r->prev), extValOf(t->r), pl.val, pr.val) > 0) {
    for (;;) {
      if (above(pl.val, pr.val, extValOf(t->l))) return false;
      if (slopeCompareExt(extValOf(t->l), extValOf(t->l->next), pl.val, pr.val) <= 0)
        return true;
      if (t->l == h.tail()) return true;
      t->l = t->l->next;
      ++sc.scanEvents;
      if (cmpPos(t->l, t->r) > 0) t->r = t->l;
    }
  }
  for (;;) {
    if (above(pl.val, pr.val, extValOf(t->r))) return false;
    if (slopeCompareExt(extValOf(t->r->prev), extValOf(t->r), pl.val, pr.val) > 0)
      return true;
    if (t->r == h.head()) return true;
    t->r = t->r->prev;
    ++sc.scanEvents;
    if (cmpPos(t->l, t->r) > 0) t->l = t->r;
  }
}

ChainNode* tangentScan(TreeNode* t, const ExtPoint& pivot, Region region, Tie tie,
                       Cursor which, ScanCounters& sc) {
  Chain& h = t->hull;
  assert(!h.empty());
  assert(pivot.x.inf == 0 && pivot.y.inf == 0);
  const Coord px = pivot.x.fin;
  ChainNode* v = clampReal(h, which == Cursor::L ? t->l : t->r);
  if (region == Region::BeforePivot) {
    assert(h.head()->x < px);
    while (v->x >= px) {
      v = v->prev;
      ++sc.scanEvents;
      assert(v->real());
    }
  } else {
    assert(h.tail()->x > px);
    while (v->x <= px) {
      v = v->next;
      ++sc.scanEvents;
      assert(v->real());
    }
  }
  auto succOk = [&](const ChainNode* s) {
    return s->real() && (region == Region::AfterPivot || s->x < px);
  };
  auto predOk = [&](const ChainNode* p) {
    return p->real() && (region == Region::BeforePivot || p->x > px);
  };
  [[maybe_unused]] const int64_t cap = h.size() + 4;
  [[maybe_unused]] int64_t steps = 0;
  for (;;) {
    assert(++steps <= cap);
    const ExtPoint vv = extValOf(v);
    if (succOk(v->next) && above(vv, pivot, extValOf(v->next))) {
      v = v->next;
      ++sc.scanEvents;
      continue;
    }
    if (predOk(v->prev) && above(vv, pivot, extValOf(v->prev))) {
      v = v->prev;
      ++sc.scanEvents;
      continue;
    }
    break;
  }
  if (tie == Tie::Leftmost) {
    while (predOk(v->prev) && collinearExt(extValOf(v->prev), extValOf(v), pivot)) {
      v = v->prev;
      ++sc.scanEvents;
    }
  } else {
    while (succOk(v->next) && collinearExt(pivot, extValOf(v), extValOf(v->next))) {
      v = v->next;
      ++sc.scanEvents;
    }
  }
  if (which == Cursor::L) {
    t->l = v;
    if (cmpPos(t->l, t->r) > 0) t->r = t->l;
  } else {
    t->r = v;
    if (cmpPos(t->l, t->r) > 0) t->l = t->r;
  }
  return v;
}

BridgeOut bridgeScan(TreeNode* tl, TreeNode* tr, ScanCounters& sc) {
  assert(tl && tr && !tl->hull.empty() && !tr->hull.empty());
  assert(tl->hull.tail()->x <= tr->hull.head()->x);
  if (tl->hull.tail()->y >= tr->hull.tail()->y)
    return BridgeOut{true, false, nullptr, nullptr};
  if (tl->hull.size() == 1 && tl->hull.tail()->x == tr->hull.head()->x &&
      tl->hull.tail()->y < tr->hull.head()->y)
    return BridgeOut{false, true, nullptr, nullptr};
  ChainNode* l = clampReal(tl->hull, tl->l);
  ChainNode* r = clampReal(tr->hull, tr->r);
  [[maybe_unused]] const int64_t cap = tl->hull.size() + tr->hull.size() + 8;
  [[maybe_unused]] int64_t steps = 0;
  for (;;) {
    assert(++steps <= cap);
    const ExtPoint lv = extValOf(l), rv = extValOf(r);
    if (l->next->real() && above(lv, rv, extValOf(l->next))) {
      l = l->next;
      ++sc.scanEvents;
      continue;
    }
    if (l->prev->real() && above(lv, rv, extValOf(l->prev))) {
      l = l->prev;
      ++sc.scanEvents;
      continue;
    }
    if (r->next->real() && above(lv, rv, extValOf(r->next))) {
      r = r->next;
      ++sc.scanEvents;
      continue;
    }
    if (r->prev->real() && above(lv, rv, extValOf(r->prev))) {
      r = r->prev;
      ++sc.scanEvents;
      continue;
    }
    break;
  }
  while (l->prev->real() && collinearExt(extValOf(l->prev), extValOf(l), extValOf(r))) {
    l = l->prev;
    ++sc.scanEvents;
  }
  while (r->next->real() && collinearExt(extValOf(l), extValOf(r), extValOf(r->next))) {
    r = r->next;
    ++sc.scanEvents;
  }
  tl->l = l;
  if (cmpPos(tl->l, tl->r) > 0) tl->r = tl->l;
  tr->r = r;
  if (cmpPos(tr->l, tr->r) > 0) tr->l = tr->r;
  return BridgeOut{false, false, l, r};
}

}  // namespace ht

namespace {

struct RunBuilder {
  ChainNode* first = nullptr;
  ChainNode* last = nullptr;
  int64_t n = 0;
  void append(ChainNode* v) {
    v->prev = last;
    v->next = nullptr;
    if (last)
      last->next = v;
    else
      first = v;
    last = v;
    ++n;
  }
  Run take() { return Run{first, last, n}; }
};

[[noreturn]] void structuralFailure(const std::string& what) {
  throw std::logic_error("hull-tree invariant failure: " + what);
}

// O(1) sanity window around a splice point: neighboring reals must increase in
// x and y and consecutive real triples must turn clockwise.
void localCheck(const Chain& h, const ChainNode* center, const char* op) {
  if (h.empty()) return;
  const ChainNode* start = center;
  for (int i = 0; i < 2 && start->prev; ++i) start = start->prev;
  const ChainNode* v = start;
  for (int i = 0; i < 5 && v; ++i, v = v->next) {
    const ChainNode* w = v->next;
    if (!w) break;
    if (v->real() && w->real() && !(v->x < w->x && v->y < w->y)) {
      std::ostringstream os;
      os << op << ": monotonicity broken between " << v->point() << " and "
         << w->point();
      structuralFailure(os.str());
    }
    const ChainNode* u = w->next;
    if (u && v->real() && w->real() && u->real() &&
        orientation(v->point(), w->point(), u->point()) != -1) {
      std::ostringstream os;
      os << op << ": convexity broken at " << w->point();
      structuralFailure(os.str());
    }
  }
}

}  // namespace

HullTree::HullTree(const std::vector<Point>& pts) : HullTree(pts, Options{}) {}

HullTree::HullTree(const std::vector<Point>& pts, const Options& opt)
    : validation_(opt.validation) {
  const int64_t n = static_cast<int64_t>(pts.size());
  if (n == 0) return;
  int32_t maxId = 0;
  for (const Point& p : pts) {
    if (!coordInRange(p.x) || !coordInRange(p.y))
      throw std::invalid_argument("coordinate out of range");
    if (p.id < 0) throw std::invalid_argument("negative point id");
    maxId = std::max(maxId, p.id);
  }
  std::vector<int32_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int32_t a, int32_t b) {
    return xKeyLess(pts[a], pts[b]);
  });
  for (int64_t i = 0; i + 1 < n; ++i) {
    const Point& a = pts[order[i]];
    const Point& b = pts[order[i + 1]];
    if (a.x == b.x && a.y == b.y) throw std::invalid_argument("duplicate point");
  }
  rankById_.assign(maxId + 1, -1);
  for (int64_t i = 0; i < n; ++i) {
    int32_t id = pts[order[i]].id;
    if (rankById_[id] != -1) throw std::invalid_argument("duplicate point id");
    rankById_[id] = static_cast<int32_t>(i);
  }
  height_ = 0;
  while ((int64_t(1) << height_) < n) ++height_;
  std::sort(order.begin(), order.end(), [&](int32_t a, int32_t b) {
    return yKeyLess(pts[a], pts[b]);
  });
  arena_.resize(n);
  for (int64_t i = 0; i < n; ++i) {
    const Point& p = pts[order[i]];
    ChainNode& v = arena_[i];
    v.x = static_cast<int32_t>(p.x);
    v.y = static_cast<int32_t>(p.y);
    v.id = p.id;
    v.kind = NodeKind::Real;
    placePoint(&v);
  }
  if (validation_ == ValidationLevel::Full) checkAfterMutation("build");
}

ht::TreeNode* HullTree::newNode() {
  nodePool_.emplace_back();
  return &nodePool_.back();
}

int HullTree::rankBit(int32_t id, int depth) const {
  assert(depth < height_);
  return (rankById_[id] >> (height_ - 1 - depth)) & 1;
}

void HullTree::placePoint(ChainNode* v) {
  ht::TreeNode** slot = &root_;
  int depth = 0;
  while (*slot && !(*slot)->hull.empty()) {
    const ChainNode* tl = (*slot)->hull.tail();
    // The only way a fresh sweep point can be dominated is lying on the
    // current tail's rightward ray; such a point keeps its rank descent.
    if (!(v->y == tl->y && v->x > tl->x)) break;
    ++sc_.scanEvents;
    slot = rankBit(v->id, depth) ? &(*slot)->R : &(*slot)->L;
    ++depth;
  }
  insertChain(Run{v, v, 1}, *slot, depth);
  ++livePoints_;
  if (validation_ != ValidationLevel::Off && depth == 0 &&
      root_->hull.tail() != v) {
    structuralFailure("tail is not the point just inserted");
  }
}

void HullTree::insertChain(Run c, ht::TreeNode*& slotRef, int depth) {
  assert(!c.empty());
  ++sc_.insertCalls;
  maxDepthTouched_ = std::max(maxDepthTouched_, depth);
  if (!slotRef) slotRef = newNode();
  ht::TreeNode* t = slotRef;
  Chain& h = t->hull;
  if (h.empty()) {
    h.spliceAfter(h.belowSentinel(), c);
    t->l = c.first;
    t->r = c.last;
    return;
  }
  const Point hc = c.first->point();
  const Point tc = c.last->point();
  ChainNode* qln;
  if (h.head()->x < hc.x && h.head()->y < hc.y)
    qln = ht::tangentScan(t, extFinite(hc), ht::Region::BeforePivot,
                          ht::Tie::Leftmost, ht::Cursor::L, sc_);
  else
    qln = h.belowSentinel();
  ChainNode* qrn;
  if (tc.x < h.tail()->x && tc.y < h.tail()->y)
    qrn = ht::tangentScan(t, extFinite(tc), ht::Region::AfterPivot,
                          ht::Tie::Rightmost, ht::Cursor::R, sc_);
  else
    qrn = h.rightSentinel();
  Run evict{};
  if (qln->next != qrn) evict = h.detachRun(qln->next, qrn->prev);
  h.spliceAfter(qln, c);
  t->l = qln;
  t->r = qrn;
  sc_.scanEvents += evict.n;
  sc_.evictions += evict.n;
  if (validation_ != ValidationLevel::Off) {
    localCheck(h, c.first, "insert");
    localCheck(h, c.last, "insert");
  }
  if (!evict.empty()) {
    RunBuilder bl, br;
    for (ChainNode* v = evict.first; v;) {
      ChainNode* nx = v->next;
      ++sc_.scanEvents;
      (rankBit(v->id, depth) ? br : bl).append(v);
      v = nx;
    }
    if (bl.n) insertChain(bl.take(), t->L, depth + 1);
    if (br.n) insertChain(br.take(), t->R, depth + 1);
  }
}

ChainNode* HullTree::trimFromLeft(ht::TreeNode* child, const ht::Pivot& aL) {
  if (!aL.real()) return child->hull.head();
  const Coord px = aL.val.x.fin;
  if (!(child->hull.tail()->x > px)) {
    assert(false);
    return nullptr;
  }
  return ht::tangentScan(child, aL.val, ht::Region::AfterPivot, ht::Tie::Rightmost,
                         ht::Cursor::L, sc_);
}

ChainNode* HullTree::trimFromRight(ht::TreeNode* child, const ht::Pivot& aR) {
  if (!aR.real()) return child->hull.tail();
  const Coord px = aR.val.x.fin;
  if (!(child->hull.head()->x < px)) {
    assert(false);
    return nullptr;
  }
  return ht::tangentScan(child, aR.val, ht::Region::BeforePivot, ht::Tie::Leftmost,
                         ht::Cursor::R, sc_);
}

// Detaches [first..last] from the child's hull, splices it into t's hull right
// after spliceAfterNode, and returns what the recursive repair of the child
// needs.  The child's cursors are parked on its hole boundaries.
struct HullTree::PromoteOut {
  ht::TreeNode* child;
  ht::Pivot aL, aR;
  ChainNode* holeL;
  ChainNode* holeR;
};

HullTree::PromoteOut HullTree::promoteRunImpl(ht::TreeNode* t, ht::TreeNode* child,
                                              ChainNode* first, ChainNode* last,
                                              ChainNode* spliceAfterNode) {
  ChainNode* holeL = first->prev;
  ChainNode* holeR = last->next;
  Run run = child->hull.detachRun(first, last);
  child->l = holeL;
  child->r = holeR;
  PromoteOut out{child, ht::Pivot::fromNode(holeL), ht::Pivot::fromNode(holeR),
                 holeL, holeR};
  sc_.promotions += static_cast<uint64_t>(run.n);
  sc_.scanEvents += static_cast<uint64_t>(run.n);
  t->hull.spliceAfter(spliceAfterNode, run);
  if (validation_ != ValidationLevel::Off) {
    localCheck(t->hull, run.first, "promote");
    localCheck(t->hull, run.last, "promote");
    localCheck(child->hull, holeL, "promote-hole");
  }
  return out;
}

void HullTree::deleteRun(ht::TreeNode* t, int depth, const ht::Pivot& aL,
                         const ht::Pivot& aR, ChainNode* aLnode, ChainNode* aRnode) {
  ++sc_.deleteCalls;
  ht::TreeNode* TL = t->L;
  ht::TreeNode* TR = t->R;
  bool useL = TL && !TL->hull.empty() && !ht::belowQuery(TL, aL, aR, sc_);
  bool useR = TR && !TR->hull.empty() && !ht::belowQuery(TR, aL, aR, sc_);
  ChainNode *Ll = nullptr, *Lr = nullptr, *Rl = nullptr, *Rr = nullptr;
  if (useL) {
    Ll = trimFromLeft(TL, aL);
    Lr = trimFromRight(TL, aR);
    if (!Ll || !Lr || ht::cmpPos(Lr, Ll) < 0) useL = false;
  }
  if (useR) {
    Rl = trimFromLeft(TR, aL);
    Rr = trimFromRight(TR, aR);
    if (!Rl || !Rr || ht::cmpPos(Rr, Rl) < 0) useR = false;
  }
  if (!useL && !useR) { (void)aRnode; return; }
  // Which side(s) actually join the roof.  With a real left pivot the left
  // side is needed iff its tangent point rises above the line from the pivot
  // to the right side's tangent point (tangent-wedge argument); with a
  // sentinel left pivot the left side always leads the rebuilt chain.  The
  // right side is symmetric; its sentinel value keeps the formula exact, and
  // the valueless case falls through to the degenerate-bridge check.
  const bool leftNeeded =
      useL && (!useR || !aL.real() ||
               above(aL.val, extValOf(Rl), extValOf(Ll)));
  const bool rightNeeded =
      useR && (!useL || !aR.hasVal ||
               above(extValOf(Lr), aR.val, extValOf(Rr)));
  const bool onlyRight = useR && !leftNeeded;
  const bool onlyLeft = useL && !rightNeeded && !onlyRight;
  if (onlyRight) {
    PromoteOut p = promoteRunImpl(t, TR, Rl, Rr, aLnode);
    deleteRun(p.child, depth + 1, p.aL, p.aR, p.holeL, p.holeR);
    return;
  }
  if (onlyLeft) {
    PromoteOut p = promoteRunImpl(t, TL, Ll, Lr, aLnode);
    deleteRun(p.child, depth + 1, p.aL, p.aR, p.holeL, p.holeR);
    return;
  }
  // Both sides: connect the two contributions with a bridge.  Degeneracy and
  // positional guards degrade to a single side when a contribution closes to
  // nothing.
  ht::BridgeOut br = ht::bridgeScan(TL, TR, sc_);
  if (br.degenerate || (!br.leftDegenerate && ht::cmpPos(Rr, br.qr) < 0)) {
    PromoteOut p = promoteRunImpl(t, TL, Ll, Lr, aLnode);
    deleteRun(p.child, depth + 1, p.aL, p.aR, p.holeL, p.holeR);
    return;
  }
  if (br.leftDegenerate || ht::cmpPos(br.ql, Ll) < 0) {
    PromoteOut p = promoteRunImpl(t, TR, Rl, Rr, aLnode);
    deleteRun(p.child, depth + 1, p.aL, p.aR, p.holeL, p.holeR);
    return;
  }
  PromoteOut p1 = promoteRunImpl(t, TL, Ll, br.ql, aLnode);
  PromoteOut p2 = promoteRunImpl(t, TR, br.qr, Rr, br.ql);
  deleteRun(p1.child, depth + 1, p1.aL, p1.aR, p1.holeL, p1.holeR);
  deleteRun(p2.child, depth + 1, p2.aL, p2.aR, p2.holeL, p2.holeR);
}

std::vector<Point> HullTree::rootHull() const {
  return root_ ? root_->hull.points() : std::vector<Point>{};
}

std::optional<std::vector<Point>> HullTree::extractHull() {
  if (!root_ || root_->hull.empty()) return std::nullopt;
  std::vector<Point> out = root_->hull.points();
  Run all = root_->hull.takeAll();
  sc_.scanEvents += static_cast<uint64_t>(all.n);
  livePoints_ -= all.n;
  root_->resetCursors();
  deleteRun(root_, 0, ht::Pivot::fromNode(root_->hull.belowSentinel()),
            ht::Pivot::fromNode(root_->hull.rightSentinel()),
            root_->hull.belowSentinel(), root_->hull.rightSentinel());
  if (validation_ == ValidationLevel::Full) checkAfterMutation("extractHull");
  return out;
}

int64_t HullTree::purgeMarked(const std::vector<uint8_t>& markedById) {
  if (!root_ || root_->hull.empty()) return 0;
  auto isMarked = [&](const ChainNode* v) {
    return v->id >= 0 && static_cast<size_t>(v->id) < markedById.size() &&
           markedById[v->id];
  };
  Chain& h = root_->hull;
  int64_t purged = 0;
  ChainNode* v = h.head();
  while (v && v->real()) {
    ++sc_.scanEvents;
    if (!isMarked(v)) {
      v = v->next;
      continue;
    }
    ChainNode* first = v;
    ChainNode* last = v;
    while (last->next->real() && isMarked(last->next)) {
      last = last->next;
      ++sc_.scanEvents;
    }
    ChainNode* aLnode = first->prev;
    ChainNode* aRnode = last->next;
    Run run = h.detachRun(first, last);
    purged += run.n;
    livePoints_ -= run.n;
    ht::Pivot aL = ht::Pivot::fromNode(aLnode);
    ht::Pivot aR = ht::Pivot::fromNode(aRnode);
    root_->l = aLnode;
    root_->r = aRnode;
    deleteRun(root_, 0, aL, aR, aLnode, aRnode);
    if (validation_ == ValidationLevel::Full) checkAfterMutation("purgeMarked");
    v = aLnode->next;
  }
  return purged;
}

int64_t HullTree::chainNodeCensus() const {
  int64_t total = 0;
  std::vector<const ht::TreeNode*> stack;
  if (root_) stack.push_back(root_);
  while (!stack.empty()) {
    const ht::TreeNode* t = stack.back();
    stack.pop_back();
    for (const ChainNode* v = t->hull.belowSentinel()->next;
         v != t->hull.rightSentinel(); v = v->next)
      ++total;
    if (t->L) stack.push_back(t->L);
    if (t->R) stack.push_back(t->R);
  }
  return total;
}

namespace {

// Every point of `child` must be dominated by `parent` (vertex-strict policy);
// single left-to-right merge scan.
bool chainDominatesChain(const Chain& parent, const Chain& child, std::string* why) {
  const ChainNode* pa = parent.head();
  if (!pa) {
    if (child.empty()) return true;
    *why = "parent hull empty under a nonempty child hull";
    return false;
  }
  for (const ChainNode* c = child.head(); c && c->real(); c = c->next) {
    bool ok;
    if (c->x < parent.head()->x) {
      ok = false;
    } else {
      while (pa != parent.tail() && pa->next->x < c->x) pa = pa->next;
      if (pa == parent.tail())
        ok = c->x >= pa->x && c->y <= pa->y;
      else
        ok = orientation(pa->point(), pa->next->point(), c->point()) <= 0;
    }
    if (!ok) {
      std::ostringstream os;
      os << "child point " << c->point() << " not dominated";
      *why = os.str();
      return false;
    }
  }
  return true;
}

}  // namespace

ValidationReport HullTree::validate() const {
  ValidationReport rep;
  int64_t census = 0;
  auto fail = [&](const std::string& code, const std::string& path,
                  const std::string& detail) {
    rep = ValidationReport{false, code, path, detail};
    return false;
  };
  auto rec = [&](auto&& self, const ht::TreeNode* t, const std::string& path,
                 int64_t lo, int64_t span) -> bool {
    if (!t) return true;
    ChainCheck cc = validateChain(t->hull);
    if (!cc.ok) return fail(cc.code, path, cc.detail);
    bool seenL = false, seenR = false;
    for (const ChainNode* v = t->hull.belowSentinel();; v = v->next) {
      if (v == t->l) seenL = true;
      if (v == t->r) seenR = true;
      if (v->real()) {
        if (static_cast<size_t>(v->id) >= rankById_.size() ||
            rankById_[v->id] < 0)
          return fail("rank-residency", path, "unknown id on chain");
        const int64_t rk = rankById_[v->id];
        if (rk < lo || rk >= lo + span) {
          std::ostringstream os;
          os << "point " << v->point() << " rank " << rk << " outside [" << lo
             << ',' << lo + span << ')';
          return fail("rank-residency", path, os.str());
        }
        ++census;
      }
      if (v == t->hull.rightSentinel()) break;
    }
    if (!seenL || !seenR)
      return fail("cursor-order", path, "cursor does not point into the hull");
    if (ht::cmpPos(t->l, t->r) > 0)
      return fail("cursor-order", path, "left cursor right of right cursor");
    for (int side = 0; side < 2; ++side) {
      const ht::TreeNode* ch = side ? t->R : t->L;
      if (!ch) continue;
      std::string why;
      if (!chainDominatesChain(t->hull, ch->hull, &why))
        return fail("domination", path + (side ? ".R" : ".L"), why);
    }
    const int64_t half = span / 2;
    if ((t->L || t->R) && half == 0)
      return fail("rank-residency", path, "children below a leaf rank range");
    if (t->L && !self(self, t->L, path + ".L", lo, half)) return false;
    if (t->R && !self(self, t->R, path + ".R", lo + half, span - half)) return false;
    return true;
  };
  if (root_) {
    if (!rec(rec, root_, "*", 0, int64_t(1) << height_)) return rep;
  }
  if (census != livePoints_) {
    std::ostringstream os;
    os << "walked " << census << " chain nodes for " << livePoints_
       << " live points";
    return ValidationReport{false, "census", "*", os.str()};
  }
  return rep;
}

void HullTree::checkAfterMutation(const char* op) const {
  ValidationReport rep = validate();
  if (!rep.ok) {
    structuralFailure(std::string(op) + ": " + rep.code + " at " + rep.path +
                      " (" + rep.detail + ")");
  }
}

}  // namespace onion
