#pragma once

// Arbitrary precision integers and rationals (GMP) plus the handful of
// number-theoretic helpers the rest of the library needs.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace pythag {

using Integer = mpz_class;
using Rational = mpq_class;

/// Always nonnegative; gcd(0, x) = |x|.
Integer gcd(const Integer& x, const Integer& y);
Integer lcm(const Integer& x, const Integer& y);

inline int sign(const Integer& x) { return sgn(x); }
inline int sign(const Rational& x) { return sgn(x); }
inline bool is_odd(const Integer& x) { return mpz_odd_p(x.get_mpz_t()) != 0; }
inline bool is_even(const Integer& x) { return !is_odd(x); }

/// Floor of the square root; x must be nonnegative.
Integer isqrt(const Integer& x);
bool is_perfect_square(const Integer& x);
bool is_probable_prime(const Integer& x);
bool is_squarefree(const Integer& x);

/// (prime, exponent) pairs of |x| in ascending prime order; x != 0.
/// Trial division with a primality shortcut on the cofactor, so inputs with
/// two large prime factors are slow.
std::vector<std::pair<Integer, unsigned>> factorize(const Integer& x);

/// Decimal with optional sign; anything else throws Error(Parse).
Integer parse_integer(std::string_view text);
/// "m/n" or a bare integer; n != 0.
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& x);
/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& x);

/// Narrowing with a range check; throws Error(PreconditionViolated).
std::int64_t to_int64(const Integer& x);

}  // namespace pythag
