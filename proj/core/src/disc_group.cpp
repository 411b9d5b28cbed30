#include "goldenk3/disc_group.hpp"

#include <algorithm>
#include <stdexcept>

namespace goldenk3 {

namespace {

struct Pivot {
  std::size_t row;
  std::size_t col;
};

// Smallest nonzero |entry| in the block rows >= s, cols >= s; row-major ties.
std::optional<Pivot> find_pivot(const IntMatrix& a, std::size_t s) {
  std::optional<Pivot> best;
  Integer best_abs;
  for (std::size_t i = s; i < a.rows(); ++i) {
    for (std::size_t j = s; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      Integer v = abs(a(i, j));
      if (!best || v < best_abs) {
        best = Pivot{i, j};
        best_abs = std::move(v);
      }
    }
  }
  return best;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input) {
  IntMatrix a = input;
  IntMatrix u = IntMatrix::identity(a.rows());
  IntMatrix v = IntMatrix::identity(a.cols());
  const std::size_t steps = std::min(a.rows(), a.cols());

  for (std::size_t s = 0; s < steps; ++s) {
    for (;;) {
      const auto pivot = find_pivot(a, s);
      if (!pivot) break;
      a.swap_rows(s, pivot->row);
      u.swap_rows(s, pivot->row);
      a.swap_cols(s, pivot->col);
      v.swap_cols(s, pivot->col);

      bool clean = true;
      for (std::size_t i = s + 1; i < a.rows(); ++i) {
        const Integer k = -floor_div(a(i, s), a(s, s));
        a.add_row_multiple(i, s, k);
        u.add_row_multiple(i, s, k);
        if (a(i, s) != 0) clean = false;
      }
      for (std::size_t j = s + 1; j < a.cols(); ++j) {
        const Integer k = -floor_div(a(s, j), a(s, s));
        a.add_col_multiple(j, s, k);
        v.add_col_multiple(j, s, k);
        if (a(s, j) != 0) clean = false;
      }
      if (!clean) continue;

      // pivot must divide the rest of the block
      bool divisible = true;
      for (std::size_t i = s + 1; i < a.rows() && divisible; ++i) {
        for (std::size_t j = s + 1; j < a.cols(); ++j) {
          if (!divides(a(s, s), a(i, j))) {
            a.add_row_multiple(s, i, 1);
            u.add_row_multiple(s, i, 1);
            divisible = false;
            break;
          }
        }
      }
      if (divisible) break;
    }
    if (a(s, s) < 0) {
      a.negate_row(s);
      u.negate_row(s);
    }
  }

  SmithForm out{std::move(u), {}, std::move(v)};
  out.diagonal.reserve(steps);
  for (std::size_t s = 0; s < steps; ++s) out.diagonal.push_back(a(s, s));
  return out;
}

SnfResult snf(const LatticeMap& a) {
  if (a.det() == 0) throw std::invalid_argument("snf: singular matrix");
  const SmithForm s = smith_normal_form(IntMatrix::from(a));
  return {s.u.to_lattice_map(), s.diagonal[0], s.diagonal[1], s.v.to_lattice_map()};
}

SnfResult snf(const GramForm& g) {
  if (g.det() == 0) throw std::invalid_argument("snf: degenerate Gram form");
  return snf(g.as_matrix());
}

Rational eval_form(const GramForm& g, const RatVec2& x, const RatVec2& y) {
  const Rational p(g.p), q(g.q), r(g.r);
  return x.x * (p * y.x + q * y.y) + x.y * (q * y.x + r * y.y);
}

Integer generated_order(const std::vector<RatVec2>& generators) {
  Integer denom = 1;
  for (const auto& g : generators) {
    denom = lcm(denom, g.x.get_den());
    denom = lcm(denom, g.y.get_den());
  }
  // Columns of denom * (Z^2 + <generators>); its covolume is the gcd of the
  // 2x2 minors, and the index over Z^2 is denom^2 / covolume.
  std::vector<Vec2> cols{{denom, 0}, {0, denom}};
  for (const auto& g : generators) {
    const Rational sx = Rational(denom) * g.x;
    const Rational sy = Rational(denom) * g.y;
    cols.push_back({sx.get_num(), sy.get_num()});
  }
  Integer covolume = 0;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    for (std::size_t j = i + 1; j < cols.size(); ++j) {
      covolume = gcd(covolume, cols[i].x * cols[j].y - cols[i].y * cols[j].x);
    }
  }
  return denom * denom / covolume;
}

namespace {

std::array<RatVec2, 2> inverse_columns(const std::array<RatVec2, 2>& b) {
  const Rational det = b[0].x * b[1].y - b[1].x * b[0].y;
  // rows of the inverse, stored as pairs
  return {RatVec2{b[1].y / det, -b[1].x / det}, RatVec2{-b[0].y / det, b[0].x / det}};
}

}  // namespace

std::vector<Integer> DiscGroup::coordinates(const RatVec2& y) const {
  const auto inv = inverse_columns(basis);
  const std::array<Rational, 2> z{inv[0].x * y.x + inv[0].y * y.y,
                                  inv[1].x * y.x + inv[1].y * y.y};
  std::vector<Integer> out;
  for (std::size_t j = 0; j < 2; ++j) {
    if (!is_integral(z[j])) throw std::invalid_argument("DiscGroup: vector is not in the dual lattice");
    if (moduli[j] > 1) out.push_back(mod_floor(z[j].get_num(), moduli[j]));
  }
  return out;
}

DiscGroup discriminant_group(const GramForm& g) {
  if (g.det() == 0) throw std::invalid_argument("discriminant_group: degenerate Gram form");
  const SnfResult s = snf(g);

  DiscGroup dg;
  dg.order = abs(g.det());
  if (const auto q = golden_family_parameter(g)) {
    const Rational qr(*q);
    dg.basis = {RatVec2{0, 1 / qr}, RatVec2{1 / (5 * qr), -2 / (5 * qr)}};
    dg.moduli = {abs(*q), 5 * abs(*q)};
    dg.family_generators = true;
  } else {
    // N* = G^-1 Z^2 = V D^-1 Z^2
    const Vec2 c1 = s.v.column(0);
    const Vec2 c2 = s.v.column(1);
    dg.basis = {RatVec2{Rational(c1.x, s.d1), Rational(c1.y, s.d1)},
                RatVec2{Rational(c2.x, s.d2), Rational(c2.y, s.d2)}};
    for (auto& b : dg.basis) {
      b.x.canonicalize();
      b.y.canonicalize();
    }
    dg.moduli = {s.d1, s.d2};
  }
  for (std::size_t j = 0; j < 2; ++j) {
    if (dg.moduli[j] > 1) {
      dg.invariant_factors.push_back(dg.moduli[j]);
      dg.generators.push_back(dg.basis[j]);
    }
  }

  std::vector<Integer> snf_factors;
  for (const Integer& d : {s.d1, s.d2}) {
    if (d > 1) snf_factors.push_back(d);
  }
  if (snf_factors != dg.invariant_factors) {
    throw std::logic_error("discriminant_group: generator orders disagree with the Smith form");
  }
  for (const auto& gen : dg.generators) {
    if (!(g.as_matrix().apply(gen)).in_lattice()) {
      throw std::logic_error("discriminant_group: generator is not in the dual lattice");
    }
  }
  if (generated_order(dg.generators) != dg.order) {
    throw std::logic_error("discriminant_group: generators do not span N*/N");
  }
  return dg;
}

bool DiscAction::is_identity() const {
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (std::size_t j = 0; j < images[i].size(); ++j) {
      if (images[i][j] != (i == j ? mod_floor(1, moduli[j]) : 0)) return false;
    }
  }
  return true;
}

bool DiscAction::is_minus_identity() const {
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (std::size_t j = 0; j < images[i].size(); ++j) {
      if (images[i][j] != (i == j ? mod_floor(-1, moduli[j]) : 0)) return false;
    }
  }
  return true;
}

namespace {

void require_isometry(const GramForm& g, const LatticeMap& m, const char* who) {
  if (!is_isometry(g, m)) throw std::invalid_argument(std::string(who) + ": map is not an isometry");
}

}  // namespace

DiscAction induced_disc_action(const GramForm& g, const LatticeMap& m) {
  require_isometry(g, m, "induced_disc_action");
  const DiscGroup dg = discriminant_group(g);
  DiscAction action{dg.invariant_factors, {}};
  for (const auto& gen : dg.generators) action.images.push_back(dg.coordinates(m.apply(gen)));
  return action;
}

DiscAction compose(const DiscAction& first, const DiscAction& second) {
  if (first.moduli != second.moduli) throw std::invalid_argument("compose: actions on different groups");
  const std::size_t n = first.moduli.size();
  DiscAction out{first.moduli, std::vector<std::vector<Integer>>(n, std::vector<Integer>(n))};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      Integer sum = 0;
      for (std::size_t j = 0; j < n; ++j) sum += first.images[i][j] * second.images[j][k];
      out.images[i][k] = mod_floor(sum, out.moduli[k]);
    }
  }
  return out;
}

bool acts_as_minus_id(const GramForm& g, const LatticeMap& m) {
  require_isometry(g, m, "acts_as_minus_id");
  const DiscGroup dg = discriminant_group(g);
  return std::all_of(dg.generators.begin(), dg.generators.end(),
                     [&](const RatVec2& x) { return (m.apply(x) + x).in_lattice(); });
}

}  // namespace goldenk3
