#include "goldenk3/surface_model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace goldenk3 {

K3Model K3Model::create(const GramForm& gram, const LatticeMap& action, int eps) {
  K3Model m{gram, action, eps, 2, {static_cast<double>(eps), 0.0}};
  m.validate();
  return m;
}

void K3Model::validate() const {
  if (eps != 1 && eps != -1) throw std::invalid_argument("K3Model: eps must be +1 or -1");
  if (std::abs(omega_scalar - std::complex<double>(eps, 0.0)) > kUnitCircleTolerance) {
    throw std::invalid_argument("K3Model: omega_scalar must equal eps");
  }
  if (rho != 2) throw std::invalid_argument("K3Model: rho must equal the Neron-Severi rank 2");
  if (ns_gram.det() == 0) throw std::invalid_argument("K3Model: degenerate Neron-Severi form");
  if (!is_isometry(ns_gram, ns_action)) {
    throw std::invalid_argument("K3Model: ns_action is not an isometry of ns_gram");
  }
}

Integer trace_of_power(const LatticeMap& m, unsigned long k) { return power(m, k).trace(); }

Integer trace_of_power_recurrence(const CharPoly& c, unsigned long k) {
  Integer prev = 2;
  Integer cur = c.trace;
  if (k == 0) return prev;
  for (unsigned long i = 1; i < k; ++i) {
    Integer next = c.trace * cur - c.det * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Integer lefschetz_from_traces(const Integer& ns_trace, int eps, int rho) {
  return 2 + ns_trace + Integer(eps) * (kK3SecondBetti - rho);
}

namespace {

unsigned long checked_power(long k) {
  if (k < 1) throw std::invalid_argument("power k must be >= 1");
  return static_cast<unsigned long>(k);
}

int sign_power(int eps, unsigned long k) { return (eps == -1 && (k % 2 == 1)) ? -1 : 1; }

Integer checked_ns_trace(const LatticeMap& action, unsigned long k) {
  Integer direct = trace_of_power(action, k);
  if (direct != trace_of_power_recurrence(charpoly(action), k)) {
    throw std::logic_error("trace of power: matrix power and recurrence disagree");
  }
  return direct;
}

}  // namespace

Integer topological_lefschetz(const K3Model& model, long k) {
  const unsigned long n = checked_power(k);
  return lefschetz_from_traces(checked_ns_trace(model.ns_action, n), sign_power(model.eps, n),
                               model.rho);
}

SurfaceHodgeCase SurfaceHodgeCase::rational_or_enriques() { return {}; }

SurfaceHodgeCase SurfaceHodgeCase::torus(std::complex<double> alpha, std::complex<double> beta) {
  SurfaceHodgeCase c{Kind::Torus, alpha, beta};
  c.validate();
  return c;
}

SurfaceHodgeCase SurfaceHodgeCase::k3(std::complex<double> alpha) {
  SurfaceHodgeCase c{Kind::K3, alpha, {1.0, 0.0}};
  c.validate();
  return c;
}

void SurfaceHodgeCase::validate() const {
  auto on_circle = [](std::complex<double> z) {
    return std::fabs(std::abs(z) - 1.0) <= kUnitCircleTolerance;
  };
  if (kind == Kind::RationalOrEnriques) return;
  if (!on_circle(alpha)) throw std::invalid_argument("SurfaceHodgeCase: |alpha| != 1");
  if (kind == Kind::Torus && !on_circle(beta)) {
    throw std::invalid_argument("SurfaceHodgeCase: |beta| != 1");
  }
}

std::string to_string(SurfaceHodgeCase::Kind kind) {
  switch (kind) {
    case SurfaceHodgeCase::Kind::RationalOrEnriques: return "rational-or-enriques";
    case SurfaceHodgeCase::Kind::Torus: return "torus";
    case SurfaceHodgeCase::Kind::K3: return "k3";
  }
  return "unknown";
}

std::complex<double> holomorphic_lefschetz(const SurfaceHodgeCase& c) {
  switch (c.kind) {
    case SurfaceHodgeCase::Kind::RationalOrEnriques:
      // only H^0(O) survives
      return {1.0, 0.0};
    case SurfaceHodgeCase::Kind::Torus:
      return (1.0 - std::conj(c.alpha)) * (1.0 - std::conj(c.beta));
    case SurfaceHodgeCase::Kind::K3:
      return 1.0 + 1.0 / c.alpha;
  }
  return {};
}

Integer ns_trace_required(int rho, int eps) {
  if (rho < 1 || rho > 20) throw std::invalid_argument("ns_trace_required: rho must be in [1, 20]");
  if (eps != 1 && eps != -1) throw std::invalid_argument("ns_trace_required: eps must be +1 or -1");
  return Integer(-2 - eps * (kK3SecondBetti - rho));
}

std::vector<Integer> rank_one_lefschetz_values(int eps) {
  return {lefschetz_from_traces(1, eps, 1), lefschetz_from_traces(-1, eps, 1)};
}

std::vector<CandidatePolynomial> charpoly_constraint(const Integer& trace) {
  std::vector<CandidatePolynomial> out;
  for (int det : {1, -1}) {
    const CharPoly c{trace, det};
    out.push_back({c, spectral_radius(c)});
  }
  return out;
}

namespace {

void require_permutation(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  for (int image : perm) {
    if (image < 0 || static_cast<std::size_t>(image) >= perm.size() || seen[image]) {
      throw std::invalid_argument("exceptional action is not a permutation");
    }
    seen[image] = true;
  }
}

}  // namespace

IntMatrix permutation_matrix(const std::vector<int>& perm) {
  require_permutation(perm);
  IntMatrix p(perm.size(), perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) p(perm[i], i) = 1;
  return p;
}

double permutation_spectral_radius(const std::vector<int>& perm) {
  require_permutation(perm);
  if (perm.empty()) return 0.0;
  // P^L = I for L the lcm of the cycle lengths, so every eigenvalue is a
  // root of unity.
  unsigned long order = 1;
  std::vector<bool> visited(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (visited[i]) continue;
    unsigned long len = 0;
    for (std::size_t j = i; !visited[j]; j = perm[j]) {
      visited[j] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  const IntMatrix p = permutation_matrix(perm);
  if (!(power(p, order) == IntMatrix::identity(perm.size()))) {
    throw std::logic_error("permutation matrix has unexpected order");
  }
  return 1.0;
}

double dynamical_degree(const K3Model& model) {
  return std::max(spectral_radius(model.ns_action), 1.0);
}

BlowupExtension blowup_extension(const K3Model& model, const std::vector<int>& exc_perm, long k) {
  const unsigned long n = checked_power(k);
  const IntMatrix perm = permutation_matrix(exc_perm);
  IntMatrix action = direct_sum(IntMatrix::from(model.ns_action), perm);

  const Integer block_trace = power(action, n).trace();
  const Integer split_trace = checked_ns_trace(model.ns_action, n) + power(perm, n).trace();
  if (block_trace != split_trace) {
    throw std::logic_error("blowup_extension: block trace disagrees with blockwise traces");
  }
  const double perm_radius = permutation_spectral_radius(exc_perm);
  BlowupExtension out{std::move(action), std::max(dynamical_degree(model), perm_radius),
                      perm_radius, 0};
  out.lefschetz = 2 + block_trace + Integer(sign_power(model.eps, n)) * (kK3SecondBetti - model.rho);
  return out;
}

}  // namespace goldenk3
