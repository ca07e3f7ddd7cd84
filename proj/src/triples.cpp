#include "pythag/triples.hpp"

#include <algorithm>
#include <limits>

#include "pythag/error.hpp"
#include "pythag/kernels.hpp"

namespace pythag {

namespace {

std::strong_ordering compare(const Integer& x, const Integer& y) {
  int c = cmp(x, y);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

void require_nonzero_leg(const PythTriple& t) {
  if (sgn(t.a()) == 0) {
    throw Error(ErrorKind::ZeroLeg, "triple " + to_string(t) + " has a = 0");
  }
}

}  // namespace

PythTriple::PythTriple(Integer a, Integer b, Integer c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (a_ * a_ + b_ * b_ != c_ * c_) {
    throw Error(ErrorKind::NotPythagorean,
                "(" + a_.get_str() + "," + b_.get_str() + "," + c_.get_str() + ") violates a^2+b^2=c^2");
  }
}

bool PythTriple::is_primitive() const { return gcd(gcd(a_, b_), c_) == 1; }

std::strong_ordering operator<=>(const PythTriple& x, const PythTriple& y) {
  if (auto o = compare(x.c_, y.c_); o != 0) return o;
  if (auto o = compare(x.a_, y.a_); o != 0) return o;
  return compare(x.b_, y.b_);
}

ReducedFraction::ReducedFraction(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) {
    throw Error(ErrorKind::PreconditionViolated, "zero denominator");
  }
  if (sgn(num) == 0) {
    throw Error(ErrorKind::ZeroParameter, "the parameter must be a nonzero rational");
  }
  Integer g = gcd(num, den);
  num_ = num / g;
  den_ = den / g;
  if (sgn(den_) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

ReducedFraction::ReducedFraction(const Rational& value) : ReducedFraction(value.get_num(), value.get_den()) {}

std::strong_ordering operator<=>(const ReducedFraction& x, const ReducedFraction& y) {
  return compare(x.num_ * y.den_, y.num_ * x.den_);
}

EtaleUnit::EtaleUnit(Rational alpha_, Rational beta_) : alpha(std::move(alpha_)), beta(std::move(beta_)) {
  if (alpha * alpha - beta * beta != 1) {
    throw Error(ErrorKind::PreconditionViolated,
                "alpha^2 - beta^2 != 1 for (" + to_string(alpha) + ", " + to_string(beta) + ")");
  }
}

PythTriple make_triple(const Integer& a, const Integer& b, const Integer& c) { return PythTriple(a, b, c); }

PythTriple from_param(const ReducedFraction& r) {
  auto t = kernel::primitive_triple(r.num(), r.den());
  return PythTriple(std::move(t.a), std::move(t.b), std::move(t.c));
}

ReducedFraction to_param(const PythTriple& t) {
  require_nonzero_leg(t);
  Integer top = t.c() + t.b();
  if (sgn(top) != 0) return ReducedFraction(top, t.a());
  // (c+b)(c-b) = a^2, so c - b != 0 here.
  return ReducedFraction(t.a(), t.c() - t.b());
}

EtaleUnit to_etale(const PythTriple& t) {
  require_nonzero_leg(t);
  Rational alpha(t.c(), t.a());
  Rational beta(t.b(), t.a());
  alpha.canonicalize();
  beta.canonicalize();
  return EtaleUnit(std::move(alpha), std::move(beta));
}

EtaleUnit etale_from_param(const ReducedFraction& r) {
  Rational half_r = r.value() / 2;
  Rational half_inverse = Rational(r.den(), r.num()) / 2;
  half_inverse.canonicalize();
  return EtaleUnit(half_r + half_inverse, half_r - half_inverse);
}

ReducedFraction param_from_etale(const EtaleUnit& u) { return ReducedFraction(Rational(u.alpha + u.beta)); }

Integer height(const PythTriple& t) { return t.c() - t.b(); }

Integer excess(const PythTriple& t) { return t.a() + t.b() - t.c(); }

Integer increment(const PythTriple& t) {
  if (sgn(t.a()) <= 0 || sgn(t.b()) <= 0 || sgn(t.c()) <= 0 || !t.is_primitive()) {
    throw Error(ErrorKind::OutOfRegime,
                "increment needs a primitive triple with positive entries, got " + to_string(t));
  }
  ReducedFraction r = to_param(t);
  if (r.num() <= r.den()) {
    throw Error(ErrorKind::OutOfRegime, "increment needs r > 1, got r = " + to_display_string(r));
  }
  return r.num() - r.den();
}

PythTriple normalize_primitive(const PythTriple& t, SignConvention convention) {
  Integer g = gcd(gcd(t.a(), t.b()), t.c());
  if (sgn(g) == 0) {
    throw Error(ErrorKind::ZeroTriple, "cannot normalize (0,0,0)");
  }
  const Integer& lead = convention == SignConvention::positive_a && sgn(t.a()) != 0 ? t.a() : t.c();
  if (sgn(lead) < 0) g = -g;
  return PythTriple(t.a() / g, t.b() / g, t.c() / g);
}

namespace {

void push_sign_variants(std::vector<PythTriple>& out, std::int64_t a, std::int64_t b, std::int64_t c) {
  for (std::int64_t sa : {1, -1}) {
    for (std::int64_t sb : {1, -1}) {
      if (b == 0 && sb < 0) continue;
      out.emplace_back(Integer(static_cast<long>(sa * a)), Integer(static_cast<long>(sb * b)),
                       Integer(static_cast<long>(c)));
    }
  }
}

void check_bound(std::int64_t c_max) {
  if (c_max < 1) {
    throw Error(ErrorKind::PreconditionViolated, "c_max must be at least 1");
  }
  if (c_max > (std::int64_t{1} << 31)) {
    throw Error(ErrorKind::PreconditionViolated, "c_max too large for the enumeration oracle");
  }
}

}  // namespace

std::vector<PythTriple> oracle_enumerate(std::int64_t c_max) {
  check_bound(c_max);
  // Smallest prime factor sieve for the legs a <= c_max.
  std::vector<std::int32_t> spf(static_cast<std::size_t>(c_max) + 1, 0);
  for (std::int64_t i = 2; i <= c_max; ++i) {
    if (spf[i] != 0) continue;
    for (std::int64_t j = i; j <= c_max; j += i) {
      if (spf[j] == 0) spf[j] = static_cast<std::int32_t>(i);
    }
  }

  std::vector<PythTriple> out;
  std::vector<std::int64_t> divisors;
  for (std::int64_t a = 1; a <= c_max; ++a) {
    // Divisors of a^2, from the factorization of a with doubled exponents.
    divisors.assign(1, 1);
    for (std::int64_t rest = a; rest > 1;) {
      std::int64_t p = spf[rest];
      int e = 0;
      while (rest % p == 0) {
        rest /= p;
        ++e;
      }
      std::size_t base = divisors.size();
      std::int64_t power = 1;
      for (int i = 0; i < 2 * e; ++i) {
        power *= p;
        for (std::size_t j = 0; j < base; ++j) divisors.push_back(divisors[j] * power);
      }
    }
    // c - b = u, c + b = v with u*v = a^2, u <= v (b >= 0) and u = v mod 2.
    for (std::int64_t u : divisors) {
      if (u > a) continue;
      std::int64_t v = a * a / u;
      if ((u + v) % 2 != 0) continue;
      std::int64_t c = (u + v) / 2;
      std::int64_t b = (v - u) / 2;
      if (c > c_max) continue;
      if (std::gcd(a, b) != 1) continue;
      push_sign_variants(out, a, b, c);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PythTriple> oracle_enumerate_scan(std::int64_t c_max) {
  check_bound(c_max);
  std::vector<PythTriple> out;
  const std::int64_t limit = c_max * c_max;
  for (std::int64_t a = 1; a <= c_max; ++a) {
    for (std::int64_t b = 0; a * a + b * b <= limit; ++b) {
      std::int64_t sum = a * a + b * b;
      auto c = static_cast<std::int64_t>(isqrt(Integer(static_cast<long>(sum))).get_si());
      if (c * c != sum || std::gcd(a, b) != 1) continue;
      push_sign_variants(out, a, b, c);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const PythTriple& t) {
  return "(" + t.a().get_str() + "," + t.b().get_str() + "," + t.c().get_str() + ")";
}

std::string to_string(const ReducedFraction& r) { return r.num().get_str() + "/" + r.den().get_str(); }

std::string to_display_string(const ReducedFraction& r) {
  if (r.den() == 1) return r.num().get_str();
  return to_string(r);
}

ReducedFraction parse_fraction(std::string_view text) {
  Rational q = parse_rational(text);
  if (sgn(q) == 0) {
    throw Error(ErrorKind::ZeroParameter, "the parameter must be a nonzero rational");
  }
  return ReducedFraction(q);
}

}  // namespace pythag
