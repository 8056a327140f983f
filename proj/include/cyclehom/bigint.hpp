#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <tuple>

namespace cyclehom {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_abs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

inline BigInt big_lcm(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::lcm(a, b);
}

// Quotient q minimizing |a - q*b|; ties toward zero. Requires b != 0.
inline BigInt div_nearest(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  BigInt r = a - q * b;
  if (big_abs(r) * 2 > big_abs(b)) q += (r < 0) == (b < 0) ? 1 : -1;
  return q;
}

// Returns (g, x, y) with g = gcd(a,b) >= 0 and a*x + b*y = g.
inline std::tuple<BigInt, BigInt, BigInt> extended_gcd(BigInt a, BigInt b) {
  BigInt x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    BigInt q = a / b;
    BigInt t = a - q * b; a = b; b = t;
    t = x0 - q * x1; x0 = x1; x1 = t;
    t = y0 - q * y1; y0 = y1; y1 = t;
  }
  if (a < 0) { a = -a; x0 = -x0; y0 = -y0; }
  return {a, x0, y0};
}

// Deterministic trial division; moduli here are desk scale.
inline bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (BigInt d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

// Value reduced into [0, n). Requires n >= 1.
inline BigInt mod_floor(const BigInt& a, const BigInt& n) {
  BigInt r = a % n;
  if (r < 0) r += n;
  return r;
}

}  // namespace cyclehom
