#pragma once

// Closed-form formulas behind the parametrization and the product, written
// once over the integer type. The public API instantiates them with Integer;
// exhaustive sweeps instantiate them with std::int64_t, which is exact as long
// as the caller keeps |m|, |n| small enough that products of triple entries
// stay below 2^63 (entries <= 2^15 is always safe).

#include <concepts>
#include <cstdint>
#include <numeric>

#include "pythag/integer.hpp"

namespace pythag::kernel {

template <class Int>
struct Triple {
  Int a, b, c;
  friend bool operator==(const Triple&, const Triple&) = default;
};

inline std::int64_t gcd(std::int64_t x, std::int64_t y) { return std::gcd(x, y); }
inline bool is_odd(std::int64_t x) { return (x & 1) != 0; }
using pythag::gcd;
using pythag::is_odd;

/// Primitive triple with c > 0 attached to the reduced fraction m/n (n > 0):
/// (2mn, m^2-n^2, m^2+n^2) when mn is even, half of it when mn is odd.
template <class Int>
Triple<Int> primitive_triple(const Int& m, const Int& n) {
  Int mn = m * n;
  Int mm = m * m;
  Int nn = n * n;
  if (is_odd(mn)) {
    return {mn, Int((mm - nn) / 2), Int((mm + nn) / 2)};
  }
  return {Int(2 * mn), Int(mm - nn), Int(mm + nn)};
}

/// (a,b,c) * (f,g,h) = (af, bh + cg, bg + ch).
template <class Int>
Triple<Int> bs_mul(const Triple<Int>& s, const Triple<Int>& t) {
  return {Int(s.a * t.a), Int(s.b * t.c + s.c * t.b), Int(s.b * t.b + s.c * t.c)};
}

/// Result of multiplying the primitive triples of m/n and k/l (both reduced,
/// positive): the product equals multiplier * primitive_triple(num, den).
template <class Int>
struct SemigroupTerm {
  Int num;
  Int den;
  Int common;      // gcd(km, ln)
  Int multiplier;  // common^2 times 1, 2 or 4
};

template <class Int>
SemigroupTerm<Int> semigroup_rule(const Int& m, const Int& n, const Int& k, const Int& l) {
  Int top = k * m;
  Int bottom = l * n;
  Int common = gcd(top, bottom);
  Int num = top / common;
  Int den = bottom / common;
  Int multiplier = common * common;
  bool both_even = !is_odd(Int(m * n)) && !is_odd(Int(k * l));
  if (both_even) {
    multiplier *= is_odd(Int(num * den)) ? 4 : 2;
  }
  return {num, den, common, multiplier};
}

}  // namespace pythag::kernel
