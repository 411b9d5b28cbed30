#pragma once

#include <optional>
#include <string>
#include <vector>

#include "goldenk3/disc_group.hpp"
#include "goldenk3/integer.hpp"
#include "goldenk3/lattice_map.hpp"
#include "goldenk3/quad_lattice.hpp"

namespace goldenk3 {

/// What was certified. `family_q` is set whenever the Gram form has the
/// golden-family shape, whichever entry point was used.
struct CertificateInput {
  GramForm gram;
  LatticeMap map;
  int eps = -1;
  std::optional<Integer> family_q;

  friend bool operator==(const CertificateInput&, const CertificateInput&) = default;
};

struct CheckResult {
  std::string id;    // "C1" .. "C8"
  std::string name;  // short machine-friendly name
  bool pass = false;
  std::string evidence;  // witness on success, counterexample on failure

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct DerivedQuantities {
  CharPoly charpoly;
  Eigenvalues eigenvalues;
  double spectral_radius = 0.0;
  double entropy = 0.0;
  std::optional<Integer> lefschetz_k1;  // empty when the map is not an isometry
  std::vector<Integer> disc_invariants;
  std::string projectivity_note;

  friend bool operator==(const DerivedQuantities& a, const DerivedQuantities& b) {
    return a.charpoly == b.charpoly && a.eigenvalues.real == b.eigenvalues.real &&
           a.eigenvalues.first == b.eigenvalues.first &&
           a.eigenvalues.second == b.eigenvalues.second &&
           a.spectral_radius == b.spectral_radius && a.entropy == b.entropy &&
           a.lefschetz_k1 == b.lefschetz_k1 && a.disc_invariants == b.disc_invariants &&
           a.projectivity_note == b.projectivity_note;
  }
};

/// Arithmetic certificate for a free automorphism of positive entropy on a
/// K3 surface with Neron-Severi lattice `gram`, g* = `map` on NS and
/// g* = eps * id on T(S). Checks, always all evaluated and in this order:
///   C1 even, C2 hyperbolic, C3 isometry with det +1 and trace > 2
///   (both eigenvalues real positive, so the positive cone is preserved),
///   C4 represents neither 0 nor +-2, C5 discriminant action is -id,
///   C6 no eigenvalue 1, C7 Lefschetz number of g is 0, C8 spectral radius > 1.
struct Certificate {
  CertificateInput input;
  std::vector<CheckResult> checks;
  DerivedQuantities derived;

  bool verdict() const;
  /// First failing check, if any.
  const CheckResult* first_failure() const;
  const CheckResult& check(const std::string& id) const;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Certificate for golden_family(q) with the action of eta^6 and eps = -1.
/// Throws std::invalid_argument for q == 0.
Certificate certify(const Integer& q);

/// Certificate for explicit data. Throws std::invalid_argument for a
/// degenerate Gram form or eps outside {+1, -1}. A non-isometry is reported
/// through C3 (with the scale lambda, if any) rather than thrown; checks that
/// need an isometry then fail with that reason.
Certificate certify_explicit(const GramForm& g, const LatticeMap& m, int eps);

/// One row of the golden-family sweep.
struct ScanRow {
  Integer q;
  bool even = false;
  Signature signature = Signature::Degenerate;
  std::vector<Integer> disc_factors;
  bool represents_zero = false;
  bool represents_plus2 = false;
  bool represents_minus2 = false;
  bool minus_id = false;
  bool verdict = false;

  friend bool operator==(const ScanRow&, const ScanRow&) = default;
};

ScanRow scan_row(const Integer& q);

/// Rows for every nonzero q in [q_min, q_max], in increasing q. Rows are
/// evaluated on up to `threads` worker threads (0 picks the hardware count).
/// Throws std::invalid_argument when q_min > q_max.
std::vector<ScanRow> family_scan(long q_min, long q_max, unsigned threads = 0);

struct PowerFixedPoints {
  long k = 1;
  Integer lefschetz;
  // No eigenvalue of ns_action^k equals 1, so g^k fixes no curve and the
  // Lefschetz number counts isolated fixed points with multiplicity.
  bool no_fixed_curves = false;
  // no_fixed_curves and lefschetz > 0.
  bool has_fixed_points = false;
  std::string note;
};

/// Lefschetz number of g^k for a passing certificate. Throws
/// std::invalid_argument when the certificate failed or k < 1.
PowerFixedPoints fixed_point_count_power(const Certificate& cert, long k);

}  // namespace goldenk3
