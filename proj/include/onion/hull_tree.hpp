#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "onion/chain.hpp"
#include "onion/geometry.hpp"

namespace onion {

struct ScanCounters {
  uint64_t scanEvents = 0;   // cursor steps / nodes walked past
  uint64_t evictions = 0;    // nodes moved down a level during insertion
  uint64_t promotions = 0;   // nodes moved up a level during deletion
  uint64_t insertCalls = 0;
  uint64_t deleteCalls = 0;

  ScanCounters& operator+=(const ScanCounters& o) {
    scanEvents += o.scanEvents;
    evictions += o.evictions;
    promotions += o.promotions;
    insertCalls += o.insertCalls;
    deleteCalls += o.deleteCalls;
    return *this;
  }
  std::string toText() const;
};

enum class ValidationLevel {
  Off,    // no structural checking
  Local,  // O(1) junction checks after every splice plus per-insert tail check
  Full,   // Local plus a whole-tree validate() after every public mutation
};

struct ValidationReport {
  bool ok = true;
  std::string code;    // convexity|monotonicity|sentinel|links|count|cursor-order|
                       // rank-residency|census|domination
  std::string path;    // node path from the root, e.g. "*", "*.L.R"
  std::string detail;
};

namespace ht {

// One node of the hull tree: a convex chain plus the two scan cursors and the
// lazily materialized children.  The skeleton position (rank range, depth) is
// implicit in the path from the root.
struct TreeNode {
  Chain hull;
  ChainNode* l = nullptr;
  ChainNode* r = nullptr;
  TreeNode* L = nullptr;
  TreeNode* R = nullptr;

  TreeNode() { resetCursors(); }
  void resetCursors() {
    l = hull.belowSentinel();
    r = hull.rightSentinel();
  }
};

// Roof-repair pivot: a surviving hull neighbor of an excised run.  Sentinel
// pivots carry the symbolic value induced by the surviving chain (head x for
// the below sentinel, tail y for the right sentinel); when the hole swallowed
// the whole chain there is no such value and every subhull must resurface.
struct Pivot {
  NodeKind kind = NodeKind::Real;
  bool hasVal = true;
  ExtPoint val{};

  static Pivot fromNode(const ChainNode* v) {
    if (v->real()) return Pivot{NodeKind::Real, true, extFinite(v->point())};
    if (v->kind == NodeKind::BelowSentinel) {
      const ChainNode* h = v->next;
      if (!h || !h->real()) return Pivot{NodeKind::BelowSentinel, false, {}};
      return Pivot{NodeKind::BelowSentinel, true, extBelowSentinel(h->x)};
    }
    const ChainNode* t = v->prev;
    if (!t || !t->real()) return Pivot{NodeKind::RightSentinel, false, {}};
    return Pivot{NodeKind::RightSentinel, true, extRightSentinel(t->y)};
  }
  bool real() const { return kind == NodeKind::Real; }
};

// Chain-order comparison of two nodes of the same chain (sentinels included).
int cmpPos(const ChainNode* a, const ChainNode* b);

// True iff every point of t's hull is below the line through pl and pr.
// A valueless pivot (hole swallowed the whole parent chain) => false; empty
// hull => true.  Moves t->l or t->r; if the result is false the moved cursor
// rests on a witness node strictly above the line.
bool belowQuery(TreeNode* t, const Pivot& pl, const Pivot& pr, ScanCounters& sc);

enum class Region { BeforePivot, AfterPivot };  // tangency x < pivot.x vs > pivot.x
enum class Tie { Leftmost, Rightmost };         // pick of a collinear tangency run
enum class Cursor { L, R };                     // which cursor starts the scan

// Finds the hull vertex v inside the region such that no hull vertex lies
// strictly above the line through v and the pivot; collinear ties resolved per
// `tie`.  The chosen cursor scans from its current position and rests on the
// result.  Precondition: the region is nonempty and such a tangency exists.
ChainNode* tangentScan(TreeNode* t, const ExtPoint& pivot, Region region, Tie tie,
                       Cursor which, ScanCounters& sc);

struct BridgeOut {
  bool degenerate = false;      // right chain contributes nothing (tail-y rule)
  bool leftDegenerate = false;  // left chain contributes nothing (single point
                                // directly below the right chain's head)
  ChainNode* ql = nullptr;
  ChainNode* qr = nullptr;
};

// Bridge between the hulls of tl and tr (tl strictly left of tr).  Cursors
// tl->l and tr->r end on the bridge nodes in the non-degenerate case.
BridgeOut bridgeScan(TreeNode* tl, TreeNode* tr, ScanCounters& sc);

}  // namespace ht

// Hull tree over one orientation of a point set.  Built by plane sweep, then
// peeled by repeated root-hull extraction; supports purging marked points off
// the root hull.  Coordinates must fit the ingestion bound and points must be
// pairwise distinct; ids must be unique and non-negative (they index the mark
// vector).
class HullTree {
 public:
  struct Options {
    ValidationLevel validation = ValidationLevel::Off;
  };

  explicit HullTree(const std::vector<Point>& pts);
  HullTree(const std::vector<Point>& pts, const Options& opt);
  HullTree(const HullTree&) = delete;
  HullTree& operator=(const HullTree&) = delete;

  bool empty() const { return livePoints_ == 0; }
  int64_t liveCount() const { return livePoints_; }
  int64_t chainNodeCensus() const;  // walks every chain; equals liveCount() when sound
  int skeletonHeight() const { return height_; }
  int maxDepthTouched() const { return maxDepthTouched_; }

  std::vector<Point> rootHull() const;
  std::optional<std::vector<Point>> extractHull();
  int64_t purgeMarked(const std::vector<uint8_t>& markedById);

  const ScanCounters& counters() const { return sc_; }
  void setValidationLevel(ValidationLevel lvl) { validation_ = lvl; }
  ValidationReport validate() const;

  ht::TreeNode* root() { return root_; }
  const ht::TreeNode* root() const { return root_; }

 private:
  ht::TreeNode* newNode();
  int rankBit(int32_t id, int depth) const;
  void placePoint(ChainNode* v);
  void insertChain(Run c, ht::TreeNode*& slot, int depth);
  void deleteRun(ht::TreeNode* t, int depth, const ht::Pivot& aL, const ht::Pivot& aR,
                 ChainNode* aLnode, ChainNode* aRnode);
  ChainNode* trimFromLeft(ht::TreeNode* child, const ht::Pivot& aL);
  ChainNode* trimFromRight(ht::TreeNode* child, const ht::Pivot& aR);
  struct PromoteOut;
  PromoteOut promoteRunImpl(ht::TreeNode* t, ht::TreeNode* child, ChainNode* first,
                            ChainNode* last, ChainNode* spliceAfterNode);
  void checkAfterMutation(const char* op) const;

  std::vector<ChainNode> arena_;
  std::deque<ht::TreeNode> nodePool_;
  std::vector<int32_t> rankById_;
  ht::TreeNode* root_ = nullptr;
  int64_t livePoints_ = 0;
  int height_ = 0;
  int maxDepthTouched_ = 0;
  ValidationLevel validation_ = ValidationLevel::Off;
  ScanCounters sc_;
};

}  // namespace onion
