#pragma once

#include <array>
#include <iosfwd>

#include "goldenk3/integer.hpp"

namespace goldenk3 {

/// Integer column vector in the basis <e1, e2>.
struct Vec2 {
  Integer x;
  Integer y;

  friend bool operator==(const Vec2&, const Vec2&) = default;
};

/// Rational column vector in N (x) Q, same basis.
struct RatVec2 {
  Rational x;
  Rational y;

  friend bool operator==(const RatVec2& u, const RatVec2& v) {
    return u.x == v.x && u.y == v.y;
  }
  friend RatVec2 operator+(const RatVec2& u, const RatVec2& v) {
    return {u.x + v.x, u.y + v.y};
  }
  friend RatVec2 operator-(const RatVec2& u, const RatVec2& v) {
    return {u.x - v.x, u.y - v.y};
  }
  friend RatVec2 operator*(const Integer& k, const RatVec2& v) {
    return {Rational(k) * v.x, Rational(k) * v.y};
  }

  /// True when both coordinates are integers, i.e. the vector lies in N.
  bool in_lattice() const { return is_integral(x) && is_integral(y); }
};

/// A 2x2 integer matrix acting on the basis <e1, e2>.
///
/// Convention used throughout the library: column j holds the coordinates of
/// the image of e_j. So (m11, m21) is the image of e1 and (m12, m22) is the
/// image of e2, and the map acts on column vectors by left multiplication.
struct LatticeMap {
  Integer m11{1};
  Integer m12{0};
  Integer m21{0};
  Integer m22{1};

  static LatticeMap identity() { return {1, 0, 0, 1}; }
  static LatticeMap minus_identity() { return {-1, 0, 0, -1}; }

  /// Builds a map from the images of e1 and e2.
  static LatticeMap from_columns(const Vec2& image_e1, const Vec2& image_e2) {
    return {image_e1.x, image_e2.x, image_e1.y, image_e2.y};
  }

  Vec2 column(int j) const { return j == 0 ? Vec2{m11, m21} : Vec2{m12, m22}; }

  Integer trace() const { return m11 + m22; }
  Integer det() const { return m11 * m22 - m12 * m21; }
  LatticeMap transpose() const { return {m11, m21, m12, m22}; }

  Vec2 apply(const Vec2& v) const {
    return {m11 * v.x + m12 * v.y, m21 * v.x + m22 * v.y};
  }
  RatVec2 apply(const RatVec2& v) const {
    return {Rational(m11) * v.x + Rational(m12) * v.y,
            Rational(m21) * v.x + Rational(m22) * v.y};
  }

  friend LatticeMap operator*(const LatticeMap& a, const LatticeMap& b) {
    return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
            a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
  }
  friend LatticeMap operator*(const Integer& k, const LatticeMap& a) {
    return {k * a.m11, k * a.m12, k * a.m21, k * a.m22};
  }
  friend bool operator==(const LatticeMap&, const LatticeMap&) = default;

  /// Row-major entries, matching the command-line map syntax.
  std::array<Integer, 4> row_major() const { return {m11, m12, m21, m22}; }
};

/// M^k for k >= 0 by repeated squaring.
LatticeMap power(const LatticeMap& m, unsigned long k);

std::ostream& operator<<(std::ostream& os, const Vec2& v);
std::ostream& operator<<(std::ostream& os, const RatVec2& v);
std::ostream& operator<<(std::ostream& os, const LatticeMap& m);

}  // namespace goldenk3
