#pragma once

#include <utility>
#include <vector>

#include "onion/geometry.hpp"

namespace onion::oracle {

// Strict convex hull as a counterclockwise cycle starting at the
// lexicographically smallest point; collinear boundary points are dropped.
// A cycle of one or two points is returned for degenerate inputs.
std::vector<Point> hullCycle(std::vector<Point> pts);

// Northwest chain of the strict hull: the clockwise hull walk from the highest
// of the leftmost points to the leftmost of the highest points, reported in
// increasing x (and y) order.
std::vector<Point> nwChain(const std::vector<Point>& pts);

// Onion peeling by repeated strict-hull removal; layer i holds the hull cycle
// of what remains after removing layers 0..i-1.
std::vector<std::vector<Point>> peel(std::vector<Point> pts);

struct BridgeResult {
  bool rightEmpty = false;  // merged chain ends inside L; R contributes nothing
  Point l, r;
};

// Bridge edge of the merged northwest chain of two chains L and R whose
// abscissas are separated (max x of L < min x of R).
BridgeResult bridge(const std::vector<Point>& L, const std::vector<Point>& R);

// Roof tangency candidates: every chain vertex v such that no chain vertex
// lies strictly above the line through v and the pivot.  Returns the leftmost
// and rightmost such vertices.
std::pair<Point, Point> tangentCandidates(const std::vector<Point>& chainPts,
                                          const ExtPoint& pivot);

}  // namespace onion::oracle
