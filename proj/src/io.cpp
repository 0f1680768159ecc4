#include "onion/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace onion::io {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
  throw ParseError("line " + std::to_string(line) + ": " + msg);
}

std::string trim(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

// Parses one coordinate as sign, integer digits, optional fraction; the value
// is scaled by 10^scalePow10 exactly or the token is rejected.
Coord parseCoord(const std::string& tok, int scalePow10, int line) {
  size_t i = 0;
  bool neg = false;
  if (i < tok.size() && (tok[i] == '+' || tok[i] == '-')) neg = tok[i++] == '-';
  std::string intPart, fracPart;
  while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i])))
    intPart.push_back(tok[i++]);
  if (i < tok.size() && tok[i] == '.') {
    ++i;
    while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i])))
      fracPart.push_back(tok[i++]);
  }
  if (i != tok.size() || (intPart.empty() && fracPart.empty()))
    fail(line, "malformed number '" + tok + "'");
  if (!fracPart.empty() && scalePow10 == 0 &&
      fracPart.find_first_not_of('0') != std::string::npos)
    fail(line, "decimal value '" + tok + "' needs --scale; refusing to round");
  // Digits past the scale must be zero: scaling never rounds.
  if (static_cast<int>(fracPart.size()) > scalePow10) {
    std::string extra = fracPart.substr(scalePow10);
    if (extra.find_first_not_of('0') != std::string::npos)
      fail(line, "'" + tok + "' has more than " + std::to_string(scalePow10) +
                     " fractional digits; refusing to round");
    fracPart.resize(scalePow10);
  }
  while (static_cast<int>(fracPart.size()) < scalePow10) fracPart.push_back('0');
  I128 v = 0;
  for (char c : intPart + fracPart) {
    v = v * 10 + (c - '0');
    if (v > I128(4) * kCoordLimit) fail(line, "coordinate '" + tok + "' overflows");
  }
  if (neg) v = -v;
  if (v < -I128(kCoordLimit) || v > I128(kCoordLimit))
    fail(line, "coordinate '" + tok + "' outside the +/-2^30 bound" +
                   (scalePow10 ? " after scaling" : ""));
  return static_cast<Coord>(v);
}

}  // namespace

std::vector<Point> readPoints(std::istream& in, int scalePow10) {
  if (scalePow10 < 0 || scalePow10 > 9)
    throw ParseError("scale must be between 0 and 9 decimal digits");
  std::vector<Point> pts;
  std::unordered_map<uint64_t, int32_t> seen;
  std::string raw;
  int line = 0;
  bool first = true;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::string s = trim(raw);
    if (s.empty()) continue;
    if (first && s == "x,y") {
      first = false;
      continue;
    }
    first = false;
    auto comma = s.find(',');
    if (comma == std::string::npos) fail(line, "expected 'x,y', got '" + s + "'");
    if (s.find(',', comma + 1) != std::string::npos)
      fail(line, "expected exactly one comma in '" + s + "'");
    Coord x = parseCoord(trim(s.substr(0, comma)), scalePow10, line);
    Coord y = parseCoord(trim(s.substr(comma + 1)), scalePow10, line);
    uint64_t key = (static_cast<uint64_t>(static_cast<uint32_t>(x + kCoordLimit))
                    << 32) |
                   static_cast<uint32_t>(y + kCoordLimit);
    int32_t id = static_cast<int32_t>(pts.size());
    auto [it, fresh] = seen.emplace(key, id);
    if (!fresh)
      fail(line, "duplicate point (" + std::to_string(x) + "," +
                     std::to_string(y) + "): ids " + std::to_string(it->second) +
                     " and " + std::to_string(id));
    pts.push_back(Point{x, y, id});
  }
  return pts;
}

std::vector<Point> readPointsFile(const std::string& path, int scalePow10) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return readPoints(in, scalePow10);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void writePoints(std::ostream& out, const std::vector<Point>& pts) {
  for (const auto& p : pts) out << p.x << ',' << p.y << '\n';
}

void writePointsFile(const std::string& path, const std::vector<Point>& pts) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  writePoints(out, pts);
  if (!out) throw ParseError("write to '" + path + "' failed");
}

}  // namespace onion::io
