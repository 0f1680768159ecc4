#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "onion/geometry.hpp"

namespace onion {

enum class GenKind {
  UniformSquare,
  UniformDisk,
  Circle,
  Grid,
  Collinear,
  NestedRings,
  Fixture,
};

std::optional<GenKind> parseGenKind(std::string_view name);
const char* genKindName(GenKind k);
std::vector<std::string> genKindNames();

struct GenOptions {
  // Reject shared abscissas/ordinates so no two points are horizontally or
  // vertically aligned; only honored by the uniform kinds.
  bool generalPosition = true;
};

// Deterministic instance generator; ids are 0..n-1 in generation order and all
// coordinates satisfy the ingestion range contract.  Throws
// std::invalid_argument when n does not fit the kind (grid wants a perfect
// square, nested-rings a multiple of 8, fixture exactly 10).
std::vector<Point> generate(GenKind kind, int64_t n, uint64_t seed,
                            const GenOptions& opt = {});

// Ten points whose layer decomposition differs between merge policies; the
// fixture generator returns exactly these.
std::vector<Point> fixturePoints();

}  // namespace onion
