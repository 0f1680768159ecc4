#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "onion/geometry.hpp"

namespace onion {

enum class NodeKind : uint8_t { Real = 0, BelowSentinel = 1, RightSentinel = 2 };

// Intrusive node of a monotone chain.  Nodes are owned by an arena (or by a
// test harness), never by the chain itself.  Coordinates are stored narrow;
// every ingested coordinate fits in 31 bits by contract.
struct ChainNode {
  ChainNode* prev = nullptr;
  ChainNode* next = nullptr;
  int32_t x = 0;
  int32_t y = 0;
  int32_t id = -1;
  NodeKind kind = NodeKind::Real;

  bool real() const { return kind == NodeKind::Real; }
  Point point() const { return Point{x, y, id}; }
};

// Symbolic value of a node.  Sentinels derive their frame coordinates from
// their real neighbor, so the chain must be nonempty when one is evaluated.
inline ExtPoint extValOf(const ChainNode* v) {
  switch (v->kind) {
    case NodeKind::Real:
      return extFinite(v->x, v->y);
    case NodeKind::BelowSentinel:
      assert(v->next && v->next->real());
      return extBelowSentinel(v->next->x);
    case NodeKind::RightSentinel:
      assert(v->prev && v->prev->real());
      return extRightSentinel(v->prev->y);
  }
  assert(false);
  return {};
}

// A detached doubly-linked run of real nodes; empty when first == nullptr.
struct Run {
  ChainNode* first = nullptr;
  ChainNode* last = nullptr;
  int64_t n = 0;
  bool empty() const { return n == 0; }
};

// Monotone chain framed by two embedded sentinel nodes.  The x and y
// coordinates of real nodes increase strictly from head to tail and
// consecutive triples turn clockwise (strict convexity); maintaining those
// invariants is the caller's job, the chain only manages links and counts.
class Chain {
 public:
  Chain() { reset(); }
  Chain(const Chain&) = delete;
  Chain& operator=(const Chain&) = delete;

  void reset() {
    ls_ = ChainNode{};
    rs_ = ChainNode{};
    ls_.kind = NodeKind::BelowSentinel;
    rs_.kind = NodeKind::RightSentinel;
    ls_.next = &rs_;
    rs_.prev = &ls_;
    cnt_ = 0;
  }

  bool empty() const { return cnt_ == 0; }
  int64_t size() const { return cnt_; }

  ChainNode* head() const { return cnt_ ? ls_.next : nullptr; }
  ChainNode* tail() const { return cnt_ ? rs_.prev : nullptr; }
  ChainNode* belowSentinel() { return &ls_; }
  ChainNode* rightSentinel() { return &rs_; }
  const ChainNode* belowSentinel() const { return &ls_; }
  const ChainNode* rightSentinel() const { return &rs_; }

  void pushBack(ChainNode* v) {
    assert(v->real());
    ChainNode* before = rs_.prev;
    before->next = v;
    v->prev = before;
    v->next = &rs_;
    rs_.prev = v;
    ++cnt_;
  }

  // Unlinks the inclusive span [first..last] of real nodes.  Walks the span to
  // count it; that walk is charged to the caller's promotion/eviction budget.
  Run detachRun(ChainNode* first, ChainNode* last) {
    assert(first->real() && last->real());
    int64_t n = 1;
    for (ChainNode* v = first; v != last; v = v->next) {
      assert(v && v->real());
      ++n;
    }
    first->prev->next = last->next;
    last->next->prev = first->prev;
    first->prev = nullptr;
    last->next = nullptr;
    cnt_ -= n;
    assert(cnt_ >= 0);
    return Run{first, last, n};
  }

  // Splices a detached run back in right after pos (pos may be the below
  // sentinel).  O(1).
  void spliceAfter(ChainNode* pos, Run r) {
    if (r.empty()) return;
    assert(pos != &rs_);
    ChainNode* after = pos->next;
    pos->next = r.first;
    r.first->prev = pos;
    r.last->next = after;
    after->prev = r.last;
    cnt_ += r.n;
  }

  Run takeAll() {
    if (empty()) return Run{};
    return detachRun(head(), tail());
  }

  std::vector<Point> points() const {
    std::vector<Point> out;
    out.reserve(static_cast<size_t>(cnt_));
    for (const ChainNode* v = ls_.next; v != &rs_; v = v->next) out.push_back(v->point());
    return out;
  }

 private:
  ChainNode ls_;
  ChainNode rs_;
  int64_t cnt_ = 0;
};

// Vertex-strict domination: r lies on or below one of the chain's segments,
// where the rightward horizontal ray out of the tail counts as a segment and
// the downward ray under the head does not; the chain's own nodes are never
// dominated by it.  Linear scan, meant for oracles and validation.
bool dominates(const Chain& c, const Point& r);
bool dominates(const std::vector<Point>& chainPts, const Point& r);

struct ChainCheck {
  bool ok = true;
  std::string code;    // "links", "count", "sentinel", "monotonicity", "convexity"
  std::string detail;
};

ChainCheck validateChain(const Chain& c);

}  // namespace onion
