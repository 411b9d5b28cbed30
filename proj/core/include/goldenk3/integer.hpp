#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace goldenk3 {

// Arbitrary-size exact integers and rationals. Every lattice quantity in the
// library is carried in these types; doubles appear only in reporting helpers.
using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& x) { return x.get_str(); }

inline std::string to_string(const Rational& x) { return x.get_str(); }

inline bool fits_int64(const Integer& x) {
  static const Integer lo{std::to_string(INT64_MIN)};
  static const Integer hi{std::to_string(INT64_MAX)};
  return x >= lo && x <= hi;
}

inline std::optional<std::int64_t> to_int64(const Integer& x) {
  if (!fits_int64(x)) return std::nullopt;
  return std::stoll(x.get_str());
}

inline double to_double(const Integer& x) { return x.get_d(); }

inline Integer abs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// Floor division and the matching non-negative remainder for b > 0.
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Integer mod_floor(const Integer& a, const Integer& b) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline bool divides(const Integer& d, const Integer& n) {
  if (d == 0) return n == 0;
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Returns the exact square root when n is a perfect square.
inline std::optional<Integer> exact_sqrt(const Integer& n) {
  if (n < 0) return std::nullopt;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline Integer isqrt(const Integer& n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline bool is_integral(const Rational& x) { return x.get_den() == 1; }

}  // namespace goldenk3
