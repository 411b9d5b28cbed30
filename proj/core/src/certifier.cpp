#include "goldenk3/certifier.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "goldenk3/golden_ring.hpp"
#include "goldenk3/surface_model.hpp"

namespace goldenk3 {

bool Certificate::verdict() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const CheckResult* Certificate::first_failure() const {
  for (const auto& c : checks) {
    if (!c.pass) return &c;
  }
  return nullptr;
}

const CheckResult& Certificate::check(const std::string& id) const {
  for (const auto& c : checks) {
    if (c.id == id) return c;
  }
  throw std::out_of_range("Certificate: no check " + id);
}

namespace {

template <typename... Parts>
std::string cat(const Parts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

CheckResult check_even(const GramForm& g) {
  CheckResult r{"C1", "even", is_even(g), ""};
  r.evidence = cat("diagonal (", g.p, ", ", g.r, ") ", r.pass ? "is even" : "has an odd entry");
  return r;
}

CheckResult check_hyperbolic(const GramForm& g) {
  const Signature s = signature(g);
  return {"C2", "hyperbolic", s == Signature::Hyperbolic,
          cat("det = ", g.det(), ", signature ", to_string(s))};
}

CheckResult check_isometry(const GramForm& g, const LatticeMap& m) {
  CheckResult r{"C3", "isometry_positive_cone", false, ""};
  const auto lambda = form_scale_under(g, m);
  if (!lambda) {
    r.evidence = "M^T G M is not an integer multiple of G";
    return r;
  }
  if (*lambda != 1) {
    r.evidence = cat("M^T G M = lambda G with lambda = ", *lambda);
    return r;
  }
  const CharPoly c = charpoly(m);
  if (c.det != 1) {
    r.evidence = cat("isometry with det = ", c.det, " (reverses orientation)");
    return r;
  }
  if (c.trace <= 2) {
    r.evidence = cat("isometry with trace = ", c.trace, " <= 2: eigenvalues not both real positive");
    return r;
  }
  r.pass = true;
  r.evidence = cat("M^T G M = G, det = 1, trace = ", c.trace, " > 2");
  return r;
}

CheckResult check_representations(const GramForm& g) {
  CheckResult r{"C4", "no_roots_no_isotropic", true, ""};
  std::ostringstream found;
  std::ostringstream undecided;
  for (int c : {0, 2, -2}) {
    const Representation rep = represents(g, c);
    if (rep.status == RepresentationStatus::Represented) {
      r.pass = false;
      if (found.tellp() > 0) found << "; ";
      found << "b(x,x) = " << c << " at x = " << *rep.witness;
    } else if (rep.status == RepresentationStatus::Unknown) {
      r.pass = false;
      if (undecided.tellp() > 0) undecided << "; ";
      undecided << "value " << c << " undecided (no witness with |a|,|b| <= "
                << rep.search_radius << ")";
    }
  }
  if (r.pass) {
    r.evidence = "no nonzero x with b(x,x) in {0, 2, -2}";
  } else {
    r.evidence = found.str();
    if (undecided.tellp() > 0) r.evidence += (r.evidence.empty() ? "" : "; ") + undecided.str();
  }
  return r;
}

CheckResult check_disc_action(const GramForm& g, const LatticeMap& m, int eps, bool isometry) {
  CheckResult r{"C5", "disc_action_matches_transcendental", false, ""};
  if (!isometry) {
    r.evidence = "requires an isometry (see C3)";
    return r;
  }
  const DiscGroup dg = discriminant_group(g);
  const RatVec2* bad = nullptr;
  for (const auto& x : dg.generators) {
    const RatVec2 image = m.apply(x);
    const RatVec2 diff = eps == -1 ? image + x : image - x;
    if (!diff.in_lattice()) {
      bad = &x;
      break;
    }
  }
  const std::string target = eps == -1 ? "-id" : "id";
  if (bad) {
    r.evidence = cat("M", *bad, (eps == -1 ? " + " : " - "), *bad, " = ",
                     (eps == -1 ? m.apply(*bad) + *bad : m.apply(*bad) - *bad),
                     " is not in N; action is not ", target);
  } else {
    r.pass = true;
    r.evidence = cat("acts as ", target, " on N*/N of order ", dg.order);
  }
  return r;
}

CheckResult check_no_eigenvalue_one(const CharPoly& c) {
  const Integer value = c.at_one();
  return {"C6", "no_fixed_curve_class", value != 0, cat("charpoly(1) = ", value)};
}

CheckResult check_lefschetz(const std::optional<Integer>& lefschetz) {
  if (!lefschetz) return {"C7", "lefschetz_zero", false, "requires an isometry (see C3)"};
  return {"C7", "lefschetz_zero", *lefschetz == 0, cat("T(S, g) = ", *lefschetz)};
}

CheckResult check_positive_entropy(const CharPoly& c) {
  return {"C8", "positive_entropy", spectral_radius_exceeds_one(c),
          cat("spectral radius of ", to_string(c), " ",
              spectral_radius_exceeds_one(c) ? "> 1" : "<= 1")};
}

std::string projectivity_note(int eps) {
  if (eps == -1) {
    return "informational: g* = -id on T(S) forces g*omega = -omega, a nontrivial root of "
           "unity, so S is projective; not checked arithmetically";
  }
  return "informational: g* = id on T(S); no projectivity conclusion";
}

}  // namespace

Certificate certify_explicit(const GramForm& g, const LatticeMap& m, int eps) {
  if (g.det() == 0) throw std::invalid_argument("certify: degenerate Gram form");
  if (eps != 1 && eps != -1) throw std::invalid_argument("certify: eps must be +1 or -1");

  Certificate cert;
  cert.input = {g, m, eps, golden_family_parameter(g)};

  const bool isometry = is_isometry(g, m);
  const CharPoly c = charpoly(m);
  if (isometry) cert.derived.lefschetz_k1 = topological_lefschetz(K3Model::create(g, m, eps), 1);

  cert.checks.push_back(check_even(g));
  cert.checks.push_back(check_hyperbolic(g));
  cert.checks.push_back(check_isometry(g, m));
  cert.checks.push_back(check_representations(g));
  cert.checks.push_back(check_disc_action(g, m, eps, isometry));
  cert.checks.push_back(check_no_eigenvalue_one(c));
  cert.checks.push_back(check_lefschetz(cert.derived.lefschetz_k1));
  cert.checks.push_back(check_positive_entropy(c));

  cert.derived.charpoly = c;
  cert.derived.eigenvalues = eigenvalues(c);
  cert.derived.spectral_radius = spectral_radius(c);
  cert.derived.entropy = entropy(c);
  cert.derived.disc_invariants = discriminant_group(g).invariant_factors;
  cert.derived.projectivity_note = projectivity_note(eps);
  return cert;
}

Certificate certify(const Integer& q) {
  return certify_explicit(golden_family(q), mult_matrix(eta_pow(6)), -1);
}

ScanRow scan_row(const Integer& q) {
  const GramForm g = golden_family(q);
  const LatticeMap eta6 = mult_matrix(eta_pow(6));
  ScanRow row;
  row.q = q;
  row.even = is_even(g);
  row.signature = signature(g);
  row.disc_factors = discriminant_group(g).invariant_factors;
  row.represents_zero = represents(g, 0).represented();
  row.represents_plus2 = represents(g, 2).represented();
  row.represents_minus2 = represents(g, -2).represented();
  row.minus_id = acts_as_minus_id(g, eta6);
  row.verdict = certify(q).verdict();
  return row;
}

std::vector<ScanRow> family_scan(long q_min, long q_max, unsigned threads) {
  if (q_min > q_max) throw std::invalid_argument("family_scan: q_min > q_max");
  std::vector<long> qs;
  for (long q = q_min; q <= q_max; ++q) {
    if (q != 0) qs.push_back(q);
  }
  std::vector<ScanRow> rows(qs.size());
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, qs.size()));

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < qs.size(); i = next++) rows[i] = scan_row(qs[i]);
  };
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  return rows;
}

PowerFixedPoints fixed_point_count_power(const Certificate& cert, long k) {
  if (!cert.verdict()) throw std::invalid_argument("fixed_point_count_power: certificate did not pass");
  if (k < 1) throw std::invalid_argument("fixed_point_count_power: k must be >= 1");
  const K3Model model = K3Model::create(cert.input.gram, cert.input.map, cert.input.eps);

  PowerFixedPoints out;
  out.k = k;
  out.lefschetz = topological_lefschetz(model, k);
  out.no_fixed_curves = charpoly(power(cert.input.map, static_cast<unsigned long>(k))).at_one() != 0;
  out.has_fixed_points = out.no_fixed_curves && out.lefschetz > 0;
  const std::string g = "g^" + std::to_string(k);
  if (!out.no_fixed_curves) {
    out.note = g + " may fix a curve; value is a signed count only";
  } else if (out.lefschetz == 0) {
    out.note = g + " is free";
  } else if (out.lefschetz > 0) {
    out.note = g + " has fixed points (" + out.lefschetz.get_str() +
               " counted with multiplicity)";
  } else {
    out.note = g + ": negative count with no fixed curves is inconsistent";
  }
  return out;
}

}  // namespace goldenk3
