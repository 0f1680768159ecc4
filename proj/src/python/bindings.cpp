#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "onion/layers.hpp"

namespace py = pybind11;

namespace {

using Pair = std::pair<int64_t, int64_t>;

std::vector<onion::Point> toPoints(const std::vector<Pair>& xs) {
  std::vector<onion::Point> pts;
  pts.reserve(xs.size());
  for (size_t i = 0; i < xs.size(); ++i)
    pts.push_back(onion::Point{xs[i].first, xs[i].second,
                               static_cast<int32_t>(i)});
  return pts;
}

std::vector<std::vector<Pair>> peel(const std::vector<Pair>& xs,
                                    const std::string& mode) {
  auto ls = onion::peelLayers(toPoints(xs), onion::parseMergeMode(mode));
  std::vector<std::vector<Pair>> out;
  out.reserve(ls.layers.size());
  for (const auto& layer : ls.layers) {
    std::vector<Pair> one;
    one.reserve(layer.size());
    for (const auto& p : layer) one.emplace_back(p.x, p.y);
    out.push_back(std::move(one));
  }
  return out;
}

std::vector<int32_t> depths(const std::vector<Pair>& xs,
                            const std::string& mode) {
  auto ls = onion::peelLayers(toPoints(xs), onion::parseMergeMode(mode));
  std::vector<int32_t> out;
  out.reserve(xs.size());
  for (size_t i = 0; i < xs.size(); ++i)
    out.push_back(ls.depth(static_cast<int32_t>(i)));
  return out;
}

std::vector<Pair> fixture() {
  std::vector<Pair> out;
  for (const auto& p : onion::counterexampleFixture())
    out.emplace_back(p.x, p.y);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "convex layers via four monotone-chain hull trees";
  m.def("peel", &peel, py::arg("points"), py::arg("mode") = "purge",
        "Peel (x, y) pairs into convex layers; each layer is returned\n"
        "counterclockwise starting at its lexicographically smallest vertex.");
  m.def("depths", &depths, py::arg("points"), py::arg("mode") = "purge",
        "1-based layer index for every input point, in input order.");
  m.def("fixture", &fixture,
        "The builtin ten-point set whose literal-mode peel differs from the\n"
        "reference peel.");
}
