#include "onion/geometry.hpp"

#include <ostream>

namespace onion {

std::ostream& operator<<(std::ostream& os, const Point& p) {
  return os << '(' << p.x << ',' << p.y << ")#" << p.id;
}

static std::ostream& printSym(std::ostream& os, SymCoord c) {
  if (c.inf == 0) return os << c.fin;
  os << (c.inf > 0 ? "+W" : "-W");
  if (c.fin != 0) os << (c.fin > 0 ? "+" : "") << c.fin;
  return os;
}

std::ostream& operator<<(std::ostream& os, const ExtPoint& p) {
  os << '(';
  printSym(os, p.x) << ',';
  printSym(os, p.y) << ')';
  return os;
}

}  // namespace onion
