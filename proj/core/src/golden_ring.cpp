#include "goldenk3/golden_ring.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace goldenk3 {

GoldenInt operator+(const GoldenInt& x, const GoldenInt& y) {
  return {x.a + y.a, x.b + y.b};
}

GoldenInt operator-(const GoldenInt& x, const GoldenInt& y) {
  return {x.a - y.a, x.b - y.b};
}

GoldenInt operator-(const GoldenInt& x) { return {-x.a, -x.b}; }

GoldenInt operator*(const GoldenInt& x, const GoldenInt& y) {
  // eta^2 = eta + 1
  return {x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b};
}

GoldenInt conj(const GoldenInt& x) { return {x.a + x.b, -x.b}; }

Integer norm(const GoldenInt& x) { return x.a * x.a + x.a * x.b - x.b * x.b; }

Integer fib(long n) {
  if (n < 0) throw std::domain_error("fib: negative index " + std::to_string(n));
  Integer f;
  mpz_fib_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

namespace {

GoldenInt unit_power(GoldenInt base, unsigned long k) {
  GoldenInt result = GoldenInt::one();
  while (k > 0) {
    if (k & 1UL) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

}  // namespace

GoldenInt eta_pow(long n) {
  if (n >= 0) return unit_power(GoldenInt::eta(), static_cast<unsigned long>(n));
  // eta^-1 = eta - 1; -(n + 1) avoids overflow at LONG_MIN
  const auto k = static_cast<unsigned long>(-(n + 1)) + 1UL;
  return unit_power(GoldenInt{-1, 1}, k);
}

LatticeMap mult_matrix(const GoldenInt& x) {
  return LatticeMap::from_columns({x.a, x.b}, {x.b, x.a + x.b});
}

Embedding embed(const GoldenInt& x) {
  const double root5 = std::sqrt(5.0);
  const double a = to_double(x.a);
  const double b = to_double(x.b);
  double plus = a + b * (1.0 + root5) / 2.0;
  double minus = a + b * (1.0 - root5) / 2.0;
  const Integer n = norm(x);
  if (n != 0) {
    if (std::fabs(plus) >= std::fabs(minus)) {
      minus = to_double(n) / plus;
    } else {
      plus = to_double(n) / minus;
    }
  }
  return {plus, minus};
}

std::string to_string(const GoldenInt& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GoldenInt& x) {
  os << x.a;
  if (x.b >= 0) {
    os << " + " << x.b;
  } else {
    os << " - " << Integer(-x.b);
  }
  return os << "*eta";
}

}  // namespace goldenk3
