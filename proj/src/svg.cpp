#include "onion/svg.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include "onion/io.hpp"

namespace onion {

namespace {

constexpr double kSide = 800.0;
constexpr double kPad = 40.0;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

struct Mapper {
  double minX = 0, minY = 0, scale = 1;
  double x(Coord v) const { return kPad + (static_cast<double>(v) - minX) * scale; }
  double y(Coord v) const {
    return kSide - kPad - (static_cast<double>(v) - minY) * scale;
  }
};

}  // namespace

void writeLayersSvg(std::ostream& out, const LayerSet& ls) {
  Coord minX = 0, maxX = 0, minY = 0, maxY = 0;
  bool any = false;
  for (const auto& layer : ls.layers)
    for (const auto& p : layer) {
      if (!any) {
        minX = maxX = p.x;
        minY = maxY = p.y;
        any = true;
      } else {
        minX = std::min(minX, p.x);
        maxX = std::max(maxX, p.x);
        minY = std::min(minY, p.y);
        maxY = std::max(maxY, p.y);
      }
    }
  Mapper m;
  m.minX = static_cast<double>(minX);
  m.minY = static_cast<double>(minY);
  const double spanX = std::max(1.0, static_cast<double>(maxX) - m.minX);
  const double spanY = std::max(1.0, static_cast<double>(maxY) - m.minY);
  m.scale = (kSide - 2 * kPad) / std::max(spanX, spanY);

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSide
      << "\" height=\"" << kSide << "\" viewBox=\"0 0 " << kSide << ' ' << kSide
      << "\">\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (size_t i = 0; i < ls.layers.size(); ++i) {
    const auto& layer = ls.layers[i];
    const char* color = kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];
    if (layer.size() >= 3) {
      out << "  <polygon fill=\"none\" stroke=\"" << color
          << "\" stroke-width=\"1.5\" points=\"";
      for (size_t j = 0; j < layer.size(); ++j)
        out << (j ? " " : "") << m.x(layer[j].x) << ',' << m.y(layer[j].y);
      out << "\"/>\n";
    } else if (layer.size() == 2) {
      out << "  <line stroke=\"" << color << "\" stroke-width=\"1.5\" x1=\""
          << m.x(layer[0].x) << "\" y1=\"" << m.y(layer[0].y) << "\" x2=\""
          << m.x(layer[1].x) << "\" y2=\"" << m.y(layer[1].y) << "\"/>\n";
    }
    for (const auto& p : layer)
      out << "  <circle cx=\"" << m.x(p.x) << "\" cy=\"" << m.y(p.y)
          << "\" r=\"3\" fill=\"" << color << "\"/>\n";
  }
  out << "</svg>\n";
}

void writeLayersSvgFile(const std::string& path, const LayerSet& ls) {
  std::ofstream out(path);
  if (!out) throw io::ParseError("cannot open '" + path + "' for writing");
  writeLayersSvg(out, ls);
  if (!out) throw io::ParseError("write to '" + path + "' failed");
}

}  // namespace onion
