#pragma once

#include <iosfwd>
#include <string>

#include "goldenk3/integer.hpp"
#include "goldenk3/lattice_map.hpp"

namespace goldenk3 {

/// Element a + b*eta of Z[eta], eta = (1 + sqrt 5) / 2, with eta^2 = eta + 1.
///
/// The pair (a, b) is also the coordinate vector of the element in the
/// Z-basis e1 = 1, e2 = eta of N = Z[eta].
struct GoldenInt {
  Integer a;
  Integer b;

  static GoldenInt one() { return {1, 0}; }
  static GoldenInt eta() { return {0, 1}; }

  Vec2 coordinates() const { return {a, b}; }

  friend bool operator==(const GoldenInt&, const GoldenInt&) = default;
};

GoldenInt operator+(const GoldenInt& x, const GoldenInt& y);
GoldenInt operator-(const GoldenInt& x, const GoldenInt& y);
GoldenInt operator-(const GoldenInt& x);
GoldenInt operator*(const GoldenInt& x, const GoldenInt& y);

inline GoldenInt gadd(const GoldenInt& x, const GoldenInt& y) { return x + y; }
inline GoldenInt gmul(const GoldenInt& x, const GoldenInt& y) { return x * y; }

/// Galois conjugation eta -> 1 - eta = -1/eta: a + b*eta -> (a + b) - b*eta.
GoldenInt conj(const GoldenInt& x);

/// x * conj(x) = a^2 + ab - b^2.
Integer norm(const GoldenInt& x);

/// Fibonacci number with fib(0) = 0, fib(1) = 1. Throws std::domain_error
/// for negative n.
Integer fib(long n);

/// eta^n for any integer n. For n >= 1 this is (fib(n-1), fib(n)); negative
/// powers use the exact inverse eta^-1 = eta - 1.
GoldenInt eta_pow(long n);

/// Matrix of multiplication by x on <e1, e2>, column-as-image:
/// e1 -> a*e1 + b*e2, e2 -> b*e1 + (a + b)*e2.
LatticeMap mult_matrix(const GoldenInt& x);

/// The two real embeddings of an element.
struct Embedding {
  double plus;   // eta -> (1 + sqrt 5) / 2
  double minus;  // eta -> (1 - sqrt 5) / 2
};

/// Real embeddings in double precision. The smaller-magnitude embedding is
/// recovered as norm / larger when the norm is nonzero, so both values carry
/// a relative error of a few ulp even when a + b*eta' cancels.
Embedding embed(const GoldenInt& x);

std::string to_string(const GoldenInt& x);
std::ostream& operator<<(std::ostream& os, const GoldenInt& x);

}  // namespace goldenk3
