#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace whcalc {

// Exact arbitrary-precision integer used for all coefficient arithmetic.
using Int = boost::multiprecision::cpp_int;

// gcd with the conventions gcd(d,0)=d and gcd(0,0)=0, so that the order of
// a tensor basis pair e_s (x) e_t is gcd(order_s, order_t) uniformly
// (order 0 meaning an infinite cyclic factor).
inline Int gcd0(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

inline Int lcm0(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  Int g = gcd0(a, b);
  Int l = (a / g) * b;
  return l < 0 ? -l : l;
}

// Canonical residue in [0, m) for m > 0; identity for m == 0.
inline Int reduceMod(const Int& v, const Int& m) {
  if (m == 0) return v;
  Int r = v % m;
  if (r < 0) r += m;
  return r;
}

inline std::string toDecimal(const Int& v) { return v.str(); }

inline Int fromDecimal(const std::string& s) { return Int(s); }

// Floor division / ceil division on machine integers (subscript arithmetic
// never leaves the int64 range).
inline long long floorDiv(long long a, long long b) {
  long long q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

inline long long ceilDiv(long long a, long long b) { return -floorDiv(-a, b); }

}  // namespace whcalc
