#include "goldenk3/lattice_map.hpp"

#include <ostream>

namespace goldenk3 {

LatticeMap power(const LatticeMap& m, unsigned long k) {
  LatticeMap result = LatticeMap::identity();
  LatticeMap base = m;
  while (k > 0) {
    if (k & 1UL) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const Vec2& v) {
  return os << '(' << v.x << ", " << v.y << ')';
}

std::ostream& operator<<(std::ostream& os, const RatVec2& v) {
  return os << '(' << v.x << ", " << v.y << ')';
}

std::ostream& operator<<(std::ostream& os, const LatticeMap& m) {
  return os << "[[" << m.m11 << ", " << m.m12 << "], [" << m.m21 << ", "
            << m.m22 << "]]";
}

}  // namespace goldenk3
