#pragma once

#include <string>
#include <vector>

#include "pythag/integer.hpp"
#include "pythag/triples.hpp"

namespace pythag {

/// Rational (a, b, c) with a^2 + b^2 = c^2 and a != 0: an element of the group
/// of rational triples under the Beauregard-Suryanarayan product.
class RationalTriple {
 public:
  /// Throws Error(ZeroLeg) for a = 0 and Error(NotPythagorean) otherwise.
  RationalTriple(Rational a, Rational b, Rational c);
  /// Throws Error(ZeroLeg) for a = 0.
  RationalTriple(const PythTriple& t);  // NOLINT(google-explicit-constructor)

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }

  bool is_integral() const;
  /// Throws Error(PreconditionViolated) if some entry is not an integer.
  PythTriple to_integral() const;

  friend bool operator==(const RationalTriple&, const RationalTriple&) = default;

 private:
  Rational a_, b_, c_;
};

/// (a,b,c) * (f,g,h) = (af, bh + cg, bg + ch). Associative and commutative;
/// a-entries multiply.
RationalTriple bs_product(const RationalTriple& s, const RationalTriple& t);
RationalTriple identity();
/// (1/a, -b/a^2, c/a^2).
RationalTriple inverse(const RationalTriple& t);
/// Binary exponentiation; negative k goes through inverse().
RationalTriple power(const RationalTriple& t, const Integer& k);

/// Sign pattern (sign a, sign c): the coset among (+-1, 0, +-1).
struct Klein {
  bool a_negative = false;
  bool c_negative = false;

  friend Klein operator*(Klein x, Klein y) {
    return {x.a_negative != y.a_negative, x.c_negative != y.c_negative};
  }
  friend bool operator==(const Klein&, const Klein&) = default;
};

/// Throws Error(ZeroHypotenuse) when c = 0 (only possible for (0,0,0)).
Klein klein_component(const RationalTriple& t);
/// "++", "+-", "-+" or "--" (sign of a first).
std::string to_string(Klein k);
Klein parse_klein(std::string_view text);

/// scalar * K * from_param(param), where K = (+-1, 0, +-1) acts by the
/// product: a picks up the sign of a, b and c the sign of c. The parameter
/// belongs to the positive component, so it is always > 0.
struct NormalForm {
  Rational scalar;
  ReducedFraction param;
  Klein klein;

  /// Throws Error(PreconditionViolated) unless scalar > 0 and param > 0.
  NormalForm(Rational scalar_, ReducedFraction param_, Klein klein_ = {});
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

NormalForm normal_form(const RationalTriple& t);
RationalTriple to_triple(const NormalForm& f);

/// Product computed purely from the two normal forms: scalar g*h*gcd(km,ln)^2,
/// with an extra 4 (reduced km/ln all odd) or 2 (otherwise) when both mn and
/// kl are even, parameter km/ln, Klein signs multiplied.
NormalForm semigroup_product(const NormalForm& p, const NormalForm& q);

/// The class of t as an integral triple: clear denominators, divide by the
/// content, and make c > 0.
PythTriple normalize_primitive(const RationalTriple& t, SignConvention convention = SignConvention::positive_c);
/// lambda with t = lambda * normalize_primitive(t).
Rational class_scalar(const RationalTriple& t);

/// One factor of r in the generating set: prime -1 stands for the sign
/// generator (-1,0,1), prime 2 for (4,3,5), an odd prime p for
/// (p, (p^2-1)/2, (p^2+1)/2).
struct GeneratorPower {
  Integer prime;
  PythTriple generator;
  Integer exponent;
  friend bool operator==(const GeneratorPower&, const GeneratorPower&) = default;
};

/// Sign first (if r < 0), then numerator primes, then denominator primes with
/// negative exponents, each in ascending order.
std::vector<GeneratorPower> generator_factorization(const ReducedFraction& r);
PythTriple generator_for_prime(const Integer& p);
/// Product of the generator powers; its class is that of from_param(r).
RationalTriple evaluate_factorization(const std::vector<GeneratorPower>& factors);

std::string to_string(const RationalTriple& t);
RationalTriple parse_rational_triple(std::string_view text);

}  // namespace pythag
