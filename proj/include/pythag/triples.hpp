#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "pythag/integer.hpp"

namespace pythag {

/// Integers (a, b, c) with a^2 + b^2 = c^2. Signs and primitivity are free.
class PythTriple {
 public:
  /// Throws Error(NotPythagorean) unless a^2 + b^2 = c^2.
  PythTriple(Integer a, Integer b, Integer c);

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& c() const { return c_; }

  bool is_primitive() const;

  friend bool operator==(const PythTriple& x, const PythTriple& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_;
  }
  /// Ordered by c, then a, then b.
  friend std::strong_ordering operator<=>(const PythTriple& x, const PythTriple& y);

 private:
  Integer a_, b_, c_;
};

/// Nonzero rational num/den in lowest terms with den > 0.
class ReducedFraction {
 public:
  /// Reduces and moves the sign to the numerator. Throws Error(ZeroParameter)
  /// for a zero numerator and Error(PreconditionViolated) for a zero denominator.
  ReducedFraction(const Integer& num, const Integer& den = 1);
  explicit ReducedFraction(const Rational& value);

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }
  Rational value() const { return Rational(num_, den_); }
  ReducedFraction reciprocal() const { return ReducedFraction(den_, num_); }
  bool is_positive() const { return sgn(num_) > 0; }

  friend bool operator==(const ReducedFraction&, const ReducedFraction&) = default;
  friend std::strong_ordering operator<=>(const ReducedFraction& x, const ReducedFraction& y);

 private:
  Integer num_, den_;
};

/// alpha + beta*eps in the split algebra Q[eps], eps^2 = 1, of norm one.
struct EtaleUnit {
  Rational alpha;
  Rational beta;

  /// Throws Error(PreconditionViolated) unless alpha^2 - beta^2 = 1.
  EtaleUnit(Rational alpha_, Rational beta_);
  friend bool operator==(const EtaleUnit&, const EtaleUnit&) = default;
};

PythTriple make_triple(const Integer& a, const Integer& b, const Integer& c);

/// The unique primitive triple with c > 0 attached to r; its a-entry is odd
/// exactly when num*den is odd.
PythTriple from_param(const ReducedFraction& r);

/// r = (c + b)/a, or a/(c - b) when c + b = 0. Throws Error(ZeroLeg) for a = 0.
ReducedFraction to_param(const PythTriple& t);

/// alpha = c/a, beta = b/a. Throws Error(ZeroLeg) for a = 0.
EtaleUnit to_etale(const PythTriple& t);

/// alpha = r/2 + 1/(2r), beta = r/2 - 1/(2r).
EtaleUnit etale_from_param(const ReducedFraction& r);
/// r = alpha + beta. Throws Error(ZeroParameter) when alpha + beta = 0, which
/// cannot happen for a valid unit.
ReducedFraction param_from_etale(const EtaleUnit& u);

/// c - b.
Integer height(const PythTriple& t);
/// a + b - c.
Integer excess(const PythTriple& t);
/// m - n for r = to_param(t) = m/n. Only defined for primitive triples with
/// positive entries, i.e. r > 1; everything else is Error(OutOfRegime).
Integer increment(const PythTriple& t);

/// Which entry the class representative makes positive. The default c > 0
/// matches from_param; a > 0 is the other common convention (a = 0 falls
/// back to c > 0).
enum class SignConvention { positive_c, positive_a };

/// Divide by gcd(|a|,|b|,|c|) and fix the sign. Throws Error(ZeroTriple) on (0,0,0).
PythTriple normalize_primitive(const PythTriple& t, SignConvention convention = SignConvention::positive_c);

/// Every primitive triple with a != 0 and 0 < c <= c_max, all signs of a and b,
/// sorted by (c, a, b). Built from the factorizations a^2 = (c-b)(c+b), so it
/// shares nothing with from_param. Throws Error(PreconditionViolated) for
/// c_max < 1 and for c_max beyond 2^31.
std::vector<PythTriple> oracle_enumerate(std::int64_t c_max);

/// Same set as oracle_enumerate, by testing every (a, b) with |a|,|b| <= c_max
/// for a square a^2 + b^2. Quadratic in c_max; meant for cross-checking.
std::vector<PythTriple> oracle_enumerate_scan(std::int64_t c_max);

std::string to_string(const PythTriple& t);
/// Always "m/n", also for integers.
std::string to_string(const ReducedFraction& r);
/// Bare integer when den = 1.
std::string to_display_string(const ReducedFraction& r);
ReducedFraction parse_fraction(std::string_view text);

}  // namespace pythag
