#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "goldenk3/integer.hpp"
#include "goldenk3/lattice_map.hpp"

namespace goldenk3 {

/// Symmetric integral bilinear form on Z^2 given by its Gram matrix
/// [[p, q], [q, r]] with p = b(e1,e1), q = b(e1,e2), r = b(e2,e2).
struct GramForm {
  Integer p;
  Integer q;
  Integer r;

  Integer det() const { return p * r - q * q; }
  LatticeMap as_matrix() const { return {p, q, q, r}; }

  friend bool operator==(const GramForm&, const GramForm&) = default;
};

/// The golden family [[2q, q], [q, -2q]]: the even hyperbolic forms on Z[eta]
/// for which multiplication by eta^2 is an isometry. Throws
/// std::invalid_argument when q == 0.
GramForm golden_family(const Integer& q);

/// Returns q when the form has the golden-family shape with q != 0.
std::optional<Integer> golden_family_parameter(const GramForm& g);

bool is_even(const GramForm& g);

enum class Signature { PositiveDefinite, NegativeDefinite, Hyperbolic, Degenerate };

Signature signature(const GramForm& g);
std::string to_string(Signature s);

/// x^T G y.
Integer eval_form(const GramForm& g, const Vec2& x, const Vec2& y);

/// lambda with M^T G M = lambda * G, if such an integer exists. A zero form
/// yields lambda = 1 only for the trivial reason; callers pass nonzero forms.
std::optional<Integer> form_scale_under(const GramForm& g, const LatticeMap& m);

/// M^T G M == G and det M = +-1.
bool is_isometry(const GramForm& g, const LatticeMap& m);

/// Coefficients of t^2 - trace*t + det.
struct CharPoly {
  Integer trace;
  Integer det;

  friend bool operator==(const CharPoly&, const CharPoly&) = default;

  /// Value of the polynomial at t = 1; zero iff 1 is an eigenvalue.
  Integer at_one() const { return 1 - trace + det; }
  Integer discriminant() const { return trace * trace - 4 * det; }
};

CharPoly charpoly(const LatticeMap& m);

/// "t^2 - 18t + 1" style rendering.
std::string to_string(const CharPoly& c);

/// Roots of a real quadratic, computed from (trace, det) at the reporting
/// boundary. When the discriminant is negative the roots are re +- i*im.
struct Eigenvalues {
  bool real = true;
  double first = 0.0;   // larger root when real, real part otherwise
  double second = 0.0;  // smaller root when real, imaginary part otherwise
};

/// Eigenvalues in double precision. The smaller real root is recovered as
/// det / larger, so both roots have relative error of a few ulp.
Eigenvalues eigenvalues(const CharPoly& c);

/// Largest absolute eigenvalue, relative error of a few ulp.
double spectral_radius(const CharPoly& c);
double spectral_radius(const LatticeMap& m);

/// Natural log of the spectral radius.
double entropy(const CharPoly& c);
double entropy(const LatticeMap& m);

/// Exact test of spectral radius > 1 using only integer arithmetic.
bool spectral_radius_exceeds_one(const CharPoly& c);

enum class RepresentationStatus {
  Represented,     // witness holds a nonzero vector with b(x,x) = c
  NotRepresented,  // proved: no nonzero vector represents c
  Unknown          // bounded search exhausted on a form with no decision procedure
};

struct Representation {
  RepresentationStatus status = RepresentationStatus::Unknown;
  std::optional<Vec2> witness;
  // Search radius used by the bounded fallback; zero when an exact decision
  // procedure answered.
  Integer search_radius{0};

  bool represented() const { return status == RepresentationStatus::Represented; }
};

std::string to_string(RepresentationStatus s);

/// Decides a^2 + ab - b^2 = m over Z. Returns the preferred solution: smallest
/// |a|, then smallest |b|, then a >= 0, then b >= 0. m = 0 has only (0, 0),
/// which is returned.
std::optional<Vec2> solve_norm_equation(const Integer& m);

inline constexpr long kDefaultSearchRadius = 200;

/// Decides whether some nonzero x has b(x, x) = c.
///
/// Golden-family forms (detected by shape) are decided exactly through the
/// norm equation. Definite forms are decided exactly by a bounded enumeration
/// whose radius follows from the smallest eigenvalue. Any other form gets a
/// box search of the given radius and answers Unknown when nothing is found.
Representation represents(const GramForm& g, const Integer& c,
                          long search_radius = kDefaultSearchRadius);

std::ostream& operator<<(std::ostream& os, const GramForm& g);

}  // namespace goldenk3
