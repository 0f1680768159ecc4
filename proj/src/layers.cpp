#include "onion/layers.hpp"

#include <algorithm>
#include <future>
#include <memory>
#include <stdexcept>

namespace onion {

MergeMode parseMergeMode(const std::string& s) {
  if (s == "purge") return MergeMode::Purge;
  if (s == "literal") return MergeMode::Literal;
  throw std::invalid_argument("merge mode must be 'purge' or 'literal'");
}

const char* mergeModeName(MergeMode m) {
  return m == MergeMode::Purge ? "purge" : "literal";
}

int32_t LayerSet::depth(int32_t id) const {
  if (id < 0 || static_cast<size_t>(id) >= depthOf.size() || depthOf[id] <= 0)
    throw std::out_of_range("depth: unknown point id " + std::to_string(id));
  return depthOf[id];
}

namespace {

// One clockwise quarter turn about the origin; orientation k applies it k
// times, so the canonical northwest peel of the transformed copy follows the
// NW, SW, SE, NE boundary of the original for k = 0..3.
Point turnCW(const Point& p) { return Point{p.y, -p.x, p.id}; }

std::vector<Point> transformed(const std::vector<Point>& pts, int k) {
  std::vector<Point> out = pts;
  for (int i = 0; i < k; ++i)
    for (auto& p : out) p = turnCW(p);
  return out;
}

}  // namespace

LayerSet peelLayers(const std::vector<Point>& pts, MergeMode mode) {
  LayerOptions opt;
  opt.mode = mode;
  return peelLayers(pts, opt);
}

LayerSet peelLayers(const std::vector<Point>& pts, const LayerOptions& opt,
                    PeelStats* stats) {
  LayerSet out;
  if (stats) *stats = PeelStats{};
  if (pts.empty()) return out;

  int32_t maxId = 0;
  for (const auto& p : pts) {
    if (p.id < 0) throw std::invalid_argument("peelLayers: negative point id");
    maxId = std::max(maxId, p.id);
  }
  std::vector<Point> byId(static_cast<size_t>(maxId) + 1);
  std::vector<uint8_t> present(static_cast<size_t>(maxId) + 1, 0);
  for (const auto& p : pts) {
    if (present[p.id])
      throw std::invalid_argument("peelLayers: duplicate point id " +
                                  std::to_string(p.id));
    present[p.id] = 1;
    byId[p.id] = p;
  }

  HullTree::Options treeOpt;
  treeOpt.validation = opt.validation;
  std::unique_ptr<HullTree> trees[4];
  if (opt.parallel) {
    std::future<std::unique_ptr<HullTree>> built[4];
    for (int k = 0; k < 4; ++k)
      built[k] = std::async(std::launch::async, [&, k] {
        return std::make_unique<HullTree>(transformed(pts, k), treeOpt);
      });
    for (int k = 0; k < 4; ++k) trees[k] = built[k].get();
  } else {
    for (int k = 0; k < 4; ++k)
      trees[k] = std::make_unique<HullTree>(transformed(pts, k), treeOpt);
  }

  std::vector<uint8_t> marked(static_cast<size_t>(maxId) + 1, 0);
  out.depthOf.assign(static_cast<size_t>(maxId) + 1, 0);
  const bool purge = opt.mode == MergeMode::Purge;

  auto sampleCensus = [&](int64_t layerIdx) {
    CensusSample s;
    s.layerIndex = layerIdx;
    for (const auto& t : trees) {
      s.livePoints += t->liveCount();
      s.chainNodes += t->chainNodeCensus();
    }
    stats->census.push_back(s);
  };
  if (stats) {
    for (const auto& t : trees) stats->buildCounters += t->counters();
    if (opt.censusEvery > 0) sampleCensus(0);
  }

  // The marks are read-only while the four trees advance one iteration, so the
  // parallel schedule only changes scheduling, never the produced chains.
  auto step = [&](int k) {
    if (purge) trees[k]->purgeMarked(marked);
    auto got = trees[k]->extractHull();
    return got ? std::move(*got) : std::vector<Point>{};
  };

  for (;;) {
    bool anyLive = false;
    for (const auto& t : trees) anyLive |= !t->empty();
    if (!anyLive) break;
    if (opt.maxLayers > 0 &&
        static_cast<int64_t>(out.layers.size()) >= opt.maxLayers)
      break;

    std::vector<Point> chain[4];
    if (opt.parallel) {
      std::future<std::vector<Point>> fut[4];
      for (int k = 0; k < 4; ++k)
        fut[k] = std::async(std::launch::async, step, k);
      for (int k = 0; k < 4; ++k) chain[k] = fut[k].get();
    } else {
      for (int k = 0; k < 4; ++k) chain[k] = step(k);
    }
    if (!purge)
      for (auto& c : chain)
        std::erase_if(c, [&](const Point& p) { return marked[p.id] != 0; });

    const int32_t layerIdx = static_cast<int32_t>(out.layers.size()) + 1;
    std::vector<int32_t> newIds;
    for (const auto& c : chain)
      for (const auto& p : c)
        if (!marked[p.id]) {
          marked[p.id] = 1;
          out.depthOf[p.id] = layerIdx;
          newIds.push_back(p.id);
        }
    if (newIds.empty()) continue;  // literal mode can extract only leftovers

    // Counterclockwise boundary: southwest, southeast, northeast chains then
    // the northwest one, each reversed since the trees emit them the other way
    // round; junction vertices shared by adjacent chains collapse by id.
    std::vector<int32_t> cycle;
    for (int k : {1, 2, 3, 0})
      for (auto it = chain[k].rbegin(); it != chain[k].rend(); ++it)
        if (cycle.empty() || cycle.back() != it->id) cycle.push_back(it->id);
    while (cycle.size() > 1 && cycle.front() == cycle.back()) cycle.pop_back();

    size_t start = 0;
    for (size_t i = 1; i < cycle.size(); ++i)
      if (xKeyLess(byId[cycle[i]], byId[cycle[start]])) start = i;
    std::vector<Point> layer;
    layer.reserve(cycle.size());
    for (size_t i = 0; i < cycle.size(); ++i)
      layer.push_back(byId[cycle[(start + i) % cycle.size()]]);
    out.layers.push_back(std::move(layer));
    if (stats && opt.censusEvery > 0 &&
        static_cast<int64_t>(out.layers.size()) % opt.censusEvery == 0)
      sampleCensus(static_cast<int64_t>(out.layers.size()));
  }

  if (stats) {
    for (const auto& t : trees) stats->counters += t->counters();
    stats->layerCount = static_cast<int64_t>(out.layers.size());
    stats->pointCount = static_cast<int64_t>(pts.size());
  }
  return out;
}

std::vector<Point> counterexampleFixture() {
  return {
      {-100, 0, 0}, {0, 100, 1}, {10, 99, 2}, {100, -3, 3}, {5, -100, 4},
      {-50, 5, 5},  {20, 50, 6}, {25, 52, 7}, {30, 4, 8},   {-2, -50, 9},
  };
}

}  // namespace onion
