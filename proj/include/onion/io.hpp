#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "onion/geometry.hpp"

namespace onion::io {

// Malformed input: message always carries the 1-based line number.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Reads the point file format: one "x,y" pair per line, '#' starts a comment,
// an optional leading header line "x,y" is skipped.  Coordinates are exact
// integers; with scalePow10 = k decimals with up to k fractional digits are
// accepted and multiplied by 10^k (never silently rounded).  Ids are assigned
// 0..n-1 in file order.  Duplicate coordinates and out-of-range values are
// rejected.
std::vector<Point> readPoints(std::istream& in, int scalePow10 = 0);
std::vector<Point> readPointsFile(const std::string& path, int scalePow10 = 0);

void writePoints(std::ostream& out, const std::vector<Point>& pts);
void writePointsFile(const std::string& path, const std::vector<Point>& pts);

}  // namespace onion::io
