#include "pythag/integer.hpp"

#include <cctype>

#include "pythag/error.hpp"

namespace pythag {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotPythagorean: return "NotPythagorean";
    case ErrorKind::ZeroLeg: return "ZeroLeg";
    case ErrorKind::ZeroHypotenuse: return "ZeroHypotenuse";
    case ErrorKind::ZeroTriple: return "ZeroTriple";
    case ErrorKind::ZeroParameter: return "ZeroParameter";
    case ErrorKind::OutOfRegime: return "OutOfRegime";
    case ErrorKind::DegenerateParameter: return "DegenerateParameter";
    case ErrorKind::DegenerateInvolution: return "DegenerateInvolution";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::InvalidDifference: return "InvalidDifference";
    case ErrorKind::MixedDiscriminant: return "MixedDiscriminant";
    case ErrorKind::HalfIntegralUnit: return "HalfIntegralUnit";
    case ErrorKind::SearchExceeded: return "SearchExceeded";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

Integer gcd(const Integer& x, const Integer& y) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return g;
}

Integer lcm(const Integer& x, const Integer& y) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return l;
}

Integer isqrt(const Integer& x) {
  if (sgn(x) < 0) {
    throw Error(ErrorKind::PreconditionViolated, "square root of negative integer " + x.get_str());
  }
  Integer r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

bool is_perfect_square(const Integer& x) {
  return sgn(x) >= 0 && mpz_perfect_square_p(x.get_mpz_t()) != 0;
}

bool is_probable_prime(const Integer& x) {
  return sgn(x) > 0 && mpz_probab_prime_p(x.get_mpz_t(), 30) != 0;
}

std::vector<std::pair<Integer, unsigned>> factorize(const Integer& x) {
  if (sgn(x) == 0) {
    throw Error(ErrorKind::PreconditionViolated, "cannot factor zero");
  }
  std::vector<std::pair<Integer, unsigned>> factors;
  Integer rest = abs(x);
  auto strip = [&](const Integer& p) {
    unsigned e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
      ++e;
    }
    if (e > 0) factors.emplace_back(p, e);
    return e > 0;
  };
  strip(Integer(2));
  // The primality test only pays off once the cofactor is large.
  bool test_rest = true;
  for (Integer p = 3; p * p <= rest; p += 2) {
    if (test_rest && rest > (1 << 24)) {
      if (is_probable_prime(rest)) break;
      test_rest = false;
    }
    if (strip(p)) test_rest = true;
  }
  if (rest > 1) factors.emplace_back(rest, 1u);
  return factors;
}

bool is_squarefree(const Integer& x) {
  if (sgn(x) == 0) return false;
  for (const auto& [p, e] : factorize(x)) {
    if (e > 1) return false;
  }
  return true;
}

Integer parse_integer(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) {
    throw Error(ErrorKind::Parse, "expected an integer, got '" + s + "'");
  }
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw Error(ErrorKind::Parse, "expected an integer, got '" + s + "'");
    }
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text));
  }
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (sgn(den) == 0) {
    throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::int64_t to_int64(const Integer& x) {
  if (!x.fits_slong_p()) {
    throw Error(ErrorKind::PreconditionViolated, "integer " + x.get_str() + " out of 64-bit range");
  }
  return x.get_si();
}

}  // namespace pythag
