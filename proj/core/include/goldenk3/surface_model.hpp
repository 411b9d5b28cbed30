#pragma once

#include <complex>
#include <string>
#include <vector>

#include "goldenk3/int_matrix.hpp"
#include "goldenk3/integer.hpp"
#include "goldenk3/lattice_map.hpp"
#include "goldenk3/quad_lattice.hpp"

namespace goldenk3 {

inline constexpr int kK3SecondBetti = 22;

/// Arithmetic model of a K3 surface automorphism g: the Neron-Severi lattice
/// with the action of g*, and the scalar eps by which g* acts on the
/// transcendental lattice T(S) of rank 22 - rho.
struct K3Model {
  GramForm ns_gram;
  LatticeMap ns_action;
  int eps = -1;
  int rho = 2;
  std::complex<double> omega_scalar{-1.0, 0.0};

  /// Builds a validated model; omega_scalar is derived from eps.
  static K3Model create(const GramForm& gram, const LatticeMap& action, int eps);

  /// Throws std::invalid_argument naming the first violated invariant:
  /// eps in {+1, -1}, omega_scalar = eps, rho = 2 (the rank of ns_gram),
  /// nondegenerate ns_gram, ns_action an isometry of ns_gram.
  void validate() const;
};

/// tr(M^k) by exact matrix power.
Integer trace_of_power(const LatticeMap& m, unsigned long k);

/// tr(M^k) by the Cayley-Hamilton recurrence
/// t_{k+1} = tr(M) t_k - det(M) t_{k-1}, t_0 = 2, t_1 = tr(M).
Integer trace_of_power_recurrence(const CharPoly& c, unsigned long k);

/// 2 + ns_trace + eps * (22 - rho).
Integer lefschetz_from_traces(const Integer& ns_trace, int eps, int rho);

/// Topological Lefschetz number of g^k:
/// 2 + tr(ns_action^k) + eps^k (22 - rho), counted with multiplicities.
/// Both trace routes are evaluated; a disagreement throws std::logic_error.
/// Throws std::invalid_argument for k < 1.
Integer topological_lefschetz(const K3Model& model, long k);

/// Surface types in the freeness case analysis, with the eigenvalue data the
/// holomorphic Lefschetz number needs.
struct SurfaceHodgeCase {
  enum class Kind { RationalOrEnriques, Torus, K3 };

  Kind kind = Kind::RationalOrEnriques;
  std::complex<double> alpha{1.0, 0.0};
  std::complex<double> beta{1.0, 0.0};

  static SurfaceHodgeCase rational_or_enriques();
  /// alpha, beta: eigenvalues on the holomorphic 1-forms.
  static SurfaceHodgeCase torus(std::complex<double> alpha, std::complex<double> beta);
  /// alpha: eigenvalue on the holomorphic 2-form.
  static SurfaceHodgeCase k3(std::complex<double> alpha);

  /// Eigenvalues must lie within 1e-12 of the unit circle; throws
  /// std::invalid_argument otherwise.
  void validate() const;
};

inline constexpr double kUnitCircleTolerance = 1e-12;

std::string to_string(SurfaceHodgeCase::Kind kind);

/// rational/Enriques: 1; torus: (1 - conj a)(1 - conj b); K3: 1 + 1/a.
std::complex<double> holomorphic_lefschetz(const SurfaceHodgeCase& c);

/// The Neron-Severi trace that makes the topological Lefschetz number vanish:
/// -2 - eps (22 - rho). Throws std::invalid_argument unless 1 <= rho <= 20.
Integer ns_trace_required(int rho, int eps);

/// A rank-one Neron-Severi lattice only admits the isometries +-1, so a
/// vanishing Lefschetz number needs ns_trace_required(1, eps) in {+1, -1}.
/// Returns the Lefschetz numbers the two admissible traces actually give.
std::vector<Integer> rank_one_lefschetz_values(int eps);

struct CandidatePolynomial {
  CharPoly poly;
  double spectral_radius;
};

/// The two integral characteristic polynomials t^2 - trace*t +- 1 available
/// to an automorphism of a rank-2 lattice with the given trace.
std::vector<CandidatePolynomial> charpoly_constraint(const Integer& trace);

/// Action extended by a permutation of m exceptional classes.
struct BlowupExtension {
  IntMatrix action;           // ns_action (+) permutation matrix
  double dynamical_degree;    // max(spectral radius of ns_action, 1)
  double permutation_radius;  // always 1
  Integer lefschetz;          // for the requested power k
};

/// exc_perm[i] is the image of exceptional class i. Throws
/// std::invalid_argument when exc_perm is not a permutation or k < 1.
BlowupExtension blowup_extension(const K3Model& model, const std::vector<int>& exc_perm,
                                 long k = 1);

/// Permutation matrix with column i equal to e_{perm[i]}.
IntMatrix permutation_matrix(const std::vector<int>& perm);

/// Spectral radius of a permutation matrix: always 1 (0 for m = 0).
double permutation_spectral_radius(const std::vector<int>& perm);

/// max(spectral radius of ns_action, 1); T(S) contributes |eps| = 1.
double dynamical_degree(const K3Model& model);

}  // namespace goldenk3
