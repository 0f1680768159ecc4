#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "onion/hull_tree.hpp"

namespace onion {

// One measured size in a doubling experiment.
struct ScalingRow {
  int64_t n = 0;
  ScanCounters counters;
  double wallMs = 0.0;
  int64_t layers = 0;
  int64_t peakNodes = 0;
};

struct CounterReport {
  std::string label;
  std::vector<ScalingRow> rows;

  // scanEvents / (n * log2 n) for row i.
  double ratio(size_t i) const;
  std::string table() const;
};

struct FitVerdict {
  bool pass = false;
  double minRatio = 0.0;
  double maxRatio = 0.0;
  std::string text;  // one-line summary
};

// Bounded-constant check over a doubling ladder: pass iff the largest
// per-size ratio scanEvents/(n*log2 n) is at most twice the smallest.
// Requires at least four sizes.
FitVerdict fitScaling(const CounterReport& report);

}  // namespace onion
