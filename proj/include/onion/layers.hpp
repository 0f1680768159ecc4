#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "onion/geometry.hpp"
#include "onion/hull_tree.hpp"

namespace onion {

// How already-layered points left inside a tree are kept off the next layer:
// Purge strips them from every root chain before extraction (default);
// Literal extracts first and drops them afterwards, which can delay an
// interior point by one layer (see counterexampleFixture).
enum class MergeMode { Purge, Literal };

MergeMode parseMergeMode(const std::string& s);
const char* mergeModeName(MergeMode m);

struct LayerOptions {
  MergeMode mode = MergeMode::Purge;
  int maxLayers = 0;  // 0 = peel everything; >0 = stop early after that many
  bool parallel = false;
  ValidationLevel validation = ValidationLevel::Off;
  int censusEvery = 0;  // >0 = record a census sample every that many layers
};

// livePoints counts ids still inside the four trees (4x the unpeeled points);
// chainNodes re-counts them by walking every chain, so the two must agree.
struct CensusSample {
  int64_t layerIndex = 0;
  int64_t livePoints = 0;
  int64_t chainNodes = 0;
};

struct PeelStats {
  ScanCounters buildCounters;  // summed over the four builds, before peeling
  ScanCounters counters;       // final: builds plus the whole peel
  std::vector<CensusSample> census;
  int64_t layerCount = 0;
  int64_t pointCount = 0;
};

// The peeling result: layers[i] lists layer i+1 counterclockwise starting at
// its lexicographically smallest vertex; depthOf maps id -> 1-based layer
// index (0 when the point was never peeled, only possible with maxLayers).
struct LayerSet {
  std::vector<std::vector<Point>> layers;
  std::vector<int32_t> depthOf;

  int64_t size() const { return static_cast<int64_t>(layers.size()); }
  int32_t depth(int32_t id) const;
};

LayerSet peelLayers(const std::vector<Point>& pts, const LayerOptions& opt = {},
                    PeelStats* stats = nullptr);
LayerSet peelLayers(const std::vector<Point>& pts, MergeMode mode);

// Ten points whose peeling separates the two merge modes: purge yields the
// true two layers; literal strands (20,50) in a third layer because (10,99)
// shadows it inside the northwest tree one iteration too long.
std::vector<Point> counterexampleFixture();

}  // namespace onion
