#pragma once

#include <array>
#include <vector>

#include "goldenk3/int_matrix.hpp"
#include "goldenk3/integer.hpp"
#include "goldenk3/lattice_map.hpp"
#include "goldenk3/quad_lattice.hpp"

namespace goldenk3 {

/// U * A * V = diag(d) with U, V unimodular, d[i] >= 0 and d[i] | d[i+1].
struct SmithForm {
  IntMatrix u;
  std::vector<Integer> diagonal;
  IntMatrix v;
};

/// Smith normal form of an arbitrary integer matrix. Pivot rule: the nonzero
/// entry of smallest absolute value in the remaining block, ties broken by
/// row-major position, so the result is deterministic.
SmithForm smith_normal_form(const IntMatrix& a);

/// Rank-2 specialisation.
struct SnfResult {
  LatticeMap u;
  Integer d1;
  Integer d2;
  LatticeMap v;
};

/// Throws std::invalid_argument for singular input.
SnfResult snf(const LatticeMap& a);
SnfResult snf(const GramForm& g);

/// b(x, y) extended to N (x) Q.
Rational eval_form(const GramForm& g, const RatVec2& x, const RatVec2& y);

/// Order of the subgroup of (N (x) Q) / N generated by the given vectors.
Integer generated_order(const std::vector<RatVec2>& generators);

/// The discriminant group N*/N of a nondegenerate rank-2 lattice.
///
/// `basis` is a Z-basis of N* chosen so that N = { sum z_j basis_j :
/// moduli_j | z_j }; the nontrivial part of it (moduli > 1) is exposed as
/// `generators` and `invariant_factors`.
struct DiscGroup {
  std::vector<Integer> invariant_factors;
  std::vector<RatVec2> generators;
  Integer order;
  // True when the generators are the closed-form golden-family ones
  // e2/q and (e1 - 2e2)/(5q) rather than read off the Smith form.
  bool family_generators = false;

  std::array<RatVec2, 2> basis;
  std::array<Integer, 2> moduli;

  /// Coordinates of y in N* with respect to `generators`, each reduced into
  /// [0, factor). Throws std::invalid_argument when y is not in N*.
  std::vector<Integer> coordinates(const RatVec2& y) const;
};

/// Throws std::invalid_argument for a degenerate form.
DiscGroup discriminant_group(const GramForm& g);

/// Induced automorphism of N*/N. images[i] holds the generator coordinates of
/// M(generators[i]) modulo N.
struct DiscAction {
  std::vector<Integer> moduli;
  std::vector<std::vector<Integer>> images;

  friend bool operator==(const DiscAction&, const DiscAction&) = default;

  bool is_identity() const;
  bool is_minus_identity() const;
};

/// Throws std::invalid_argument when m is not an isometry of g.
DiscAction induced_disc_action(const GramForm& g, const LatticeMap& m);

/// Action of "apply first, then second".
DiscAction compose(const DiscAction& first, const DiscAction& second);

/// True iff m(x) + x lies in N for every generator x of N*/N. Throws
/// std::invalid_argument when m is not an isometry of g.
bool acts_as_minus_id(const GramForm& g, const LatticeMap& m);

}  // namespace goldenk3
