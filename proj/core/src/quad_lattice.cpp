#include "goldenk3/quad_lattice.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace goldenk3 {

GramForm golden_family(const Integer& q) {
  if (q == 0) throw std::invalid_argument("golden_family: q must be nonzero");
  return {2 * q, q, -2 * q};
}

std::optional<Integer> golden_family_parameter(const GramForm& g) {
  if (g.q != 0 && g.p == 2 * g.q && g.r == -2 * g.q) return g.q;
  return std::nullopt;
}

bool is_even(const GramForm& g) { return divides(2, g.p) && divides(2, g.r); }

Signature signature(const GramForm& g) {
  const Integer d = g.det();
  if (d < 0) return Signature::Hyperbolic;
  if (d == 0) return Signature::Degenerate;
  return g.p > 0 ? Signature::PositiveDefinite : Signature::NegativeDefinite;
}

std::string to_string(Signature s) {
  switch (s) {
    case Signature::PositiveDefinite: return "positive-definite";
    case Signature::NegativeDefinite: return "negative-definite";
    case Signature::Hyperbolic: return "hyperbolic";
    case Signature::Degenerate: return "degenerate";
  }
  return "unknown";
}

Integer eval_form(const GramForm& g, const Vec2& x, const Vec2& y) {
  return x.x * (g.p * y.x + g.q * y.y) + x.y * (g.q * y.x + g.r * y.y);
}

std::optional<Integer> form_scale_under(const GramForm& g, const LatticeMap& m) {
  const Vec2 c1 = m.column(0);
  const Vec2 c2 = m.column(1);
  const GramForm pulled{eval_form(g, c1, c1), eval_form(g, c1, c2), eval_form(g, c2, c2)};

  std::optional<Integer> lambda;
  for (auto [orig, img] : {std::pair{&g.p, &pulled.p}, std::pair{&g.q, &pulled.q},
                           std::pair{&g.r, &pulled.r}}) {
    if (*orig == 0) {
      if (*img != 0) return std::nullopt;
      continue;
    }
    if (!divides(*orig, *img)) return std::nullopt;
    Integer candidate = *img / *orig;
    if (lambda && *lambda != candidate) return std::nullopt;
    lambda = candidate;
  }
  if (!lambda) return Integer{1};
  return lambda;
}

bool is_isometry(const GramForm& g, const LatticeMap& m) {
  const auto lambda = form_scale_under(g, m);
  const Integer d = m.det();
  return lambda && *lambda == 1 && (d == 1 || d == -1);
}

CharPoly charpoly(const LatticeMap& m) { return {m.trace(), m.det()}; }

std::string to_string(const CharPoly& c) {
  std::ostringstream os;
  os << "t^2";
  if (c.trace != 0) {
    os << (c.trace > 0 ? " - " : " + ") << abs(c.trace) << 't';
  }
  if (c.det != 0) {
    os << (c.det > 0 ? " + " : " - ") << abs(c.det);
  }
  return os.str();
}

Eigenvalues eigenvalues(const CharPoly& c) {
  const Integer disc = c.discriminant();
  const double tr = to_double(c.trace);
  if (disc < 0) {
    return {false, tr / 2.0, std::sqrt(-to_double(disc)) / 2.0};
  }
  const double root = std::sqrt(to_double(disc));
  const double larger = c.trace >= 0 ? (tr + root) / 2.0 : (tr - root) / 2.0;
  if (larger == 0.0) return {true, 0.0, 0.0};
  return {true, larger, to_double(c.det) / larger};
}

double spectral_radius(const CharPoly& c) {
  const Integer disc = c.discriminant();
  if (disc < 0) return std::sqrt(std::fabs(to_double(c.det)));
  return (std::fabs(to_double(c.trace)) + std::sqrt(to_double(disc))) / 2.0;
}

double spectral_radius(const LatticeMap& m) { return spectral_radius(charpoly(m)); }

double entropy(const CharPoly& c) { return std::log(spectral_radius(c)); }

double entropy(const LatticeMap& m) { return entropy(charpoly(m)); }

bool spectral_radius_exceeds_one(const CharPoly& c) {
  const Integer disc = c.discriminant();
  if (disc < 0) return c.det > 1;  // |lambda|^2 = det
  const Integer t = abs(c.trace);
  if (disc == 0) return t > 2;
  // radius = (|tr| + sqrt(disc)) / 2 > 1  <=>  sqrt(disc) > 2 - |tr|
  if (t >= 2) return true;
  const Integer slack = 2 - t;
  return disc > slack * slack;
}

std::string to_string(RepresentationStatus s) {
  switch (s) {
    case RepresentationStatus::Represented: return "represented";
    case RepresentationStatus::NotRepresented: return "not-represented";
    case RepresentationStatus::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

// Deterministic preference among witnesses: smallest |a|, then |b|, then
// non-negative a, then non-negative b.
auto witness_key(const Vec2& v) {
  return std::make_tuple(abs(v.x), abs(v.y), v.x < 0, v.y < 0);
}

void keep_preferred(std::optional<Vec2>& best, const Vec2& candidate) {
  if (!best || witness_key(candidate) < witness_key(*best)) best = candidate;
}

// |b| <= eta * sqrt(|m|), i.e. 2b^2 - 3|m| <= sqrt(5)|m|, decided exactly.
bool within_unit_window(const Integer& b, const Integer& abs_m) {
  const Integer lhs = 2 * b * b - 3 * abs_m;
  if (lhs <= 0) return true;
  return lhs * lhs <= 5 * abs_m * abs_m;
}

}  // namespace

// Every solution of a^2 + ab - b^2 = m (m != 0) is carried by a power of the
// norm-one unit eta^2 into the window |b| <= eta*sqrt(|m|): scaling the first
// embedding into [sqrt|m|, eta^2 sqrt|m|) bounds both embeddings, and
// b = (s1 - s2)/sqrt 5. Inside the window a is read off 5b^2 + 4m being a
// square; the parity of its root always matches b.
std::optional<Vec2> solve_norm_equation(const Integer& m) {
  if (m == 0) return Vec2{0, 0};
  const Integer abs_m = abs(m);
  std::optional<Vec2> best;
  for (Integer b = 0; within_unit_window(b, abs_m); ++b) {
    for (const Integer& bb : {b, Integer(-b)}) {
      const auto s = exact_sqrt(5 * bb * bb + 4 * m);
      if (!s) continue;
      keep_preferred(best, Vec2{(-bb + *s) / 2, bb});
      keep_preferred(best, Vec2{(-bb - *s) / 2, bb});
      if (b == 0) break;
    }
  }
  return best;
}

namespace {

Representation box_search(const GramForm& g, const Integer& c, const Integer& radius) {
  std::optional<Vec2> best;
  for (Integer a = -radius; a <= radius; ++a) {
    for (Integer b = -radius; b <= radius; ++b) {
      if (a == 0 && b == 0) continue;
      const Vec2 v{a, b};
      if (eval_form(g, v, v) == c) keep_preferred(best, v);
    }
  }
  Representation rep;
  rep.search_radius = radius;
  if (best) {
    rep.status = RepresentationStatus::Represented;
    rep.witness = best;
  }
  return rep;
}

Representation decided(std::optional<Vec2> witness) {
  Representation rep;
  rep.status = witness ? RepresentationStatus::Represented
                       : RepresentationStatus::NotRepresented;
  rep.witness = std::move(witness);
  return rep;
}

}  // namespace

Representation represents(const GramForm& g, const Integer& c, long search_radius) {
  if (const auto q = golden_family_parameter(g)) {
    // b(x, x) = 2q * norm(a + b*eta)
    const Integer two_q = 2 * *q;
    if (c == 0 || !divides(two_q, c)) return decided(std::nullopt);
    return decided(solve_norm_equation(c / two_q));
  }

  const Signature sig = signature(g);
  if (sig == Signature::PositiveDefinite || sig == Signature::NegativeDefinite) {
    const bool positive = sig == Signature::PositiveDefinite;
    if (c == 0 || (c > 0) != positive) return decided(std::nullopt);
    // |b(x,x)| >= lambda_min |x|^2 and lambda_min >= det / |trace|
    const Integer trace = abs(g.p + g.r);
    const Integer bound = isqrt(abs(c) * trace / g.det()) + 1;
    Representation rep = box_search(g, c, bound);
    if (!rep.represented()) rep.status = RepresentationStatus::NotRepresented;
    rep.search_radius = 0;
    return rep;
  }

  if (c == 0) {
    if (sig == Signature::Degenerate) {
      // kernel vector
      if (g.p == 0 && g.q == 0) return decided(Vec2{1, 0});
      const Integer d = gcd(g.p, g.q);
      return decided(Vec2{-g.q / d, g.p / d});
    }
    // isotropic iff -det is a square; b(x,x) = 0 then has a rational root
    if (!exact_sqrt(-g.det())) return decided(std::nullopt);
  }

  return box_search(g, c, Integer(search_radius));
}

std::ostream& operator<<(std::ostream& os, const GramForm& g) {
  return os << "[[" << g.p << ", " << g.q << "], [" << g.q << ", " << g.r << "]]";
}

}  // namespace goldenk3
