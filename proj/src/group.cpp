#include "pythag/group.hpp"

#include <cctype>

#include "pythag/error.hpp"
#include "pythag/kernels.hpp"

namespace pythag {

namespace {

Rational canonical(Rational q) {
  q.canonicalize();
  return q;
}

}  // namespace

RationalTriple::RationalTriple(Rational a, Rational b, Rational c)
    : a_(canonical(std::move(a))), b_(canonical(std::move(b))), c_(canonical(std::move(c))) {
  if (sgn(a_) == 0) {
    throw Error(ErrorKind::ZeroLeg, "rational triple with a = 0");
  }
  if (a_ * a_ + b_ * b_ != c_ * c_) {
    throw Error(ErrorKind::NotPythagorean,
                "(" + pythag::to_string(a_) + "," + pythag::to_string(b_) + "," + pythag::to_string(c_) +
                    ") violates a^2+b^2=c^2");
  }
}

RationalTriple::RationalTriple(const PythTriple& t) : RationalTriple(Rational(t.a()), Rational(t.b()), Rational(t.c())) {}

bool RationalTriple::is_integral() const {
  return a_.get_den() == 1 && b_.get_den() == 1 && c_.get_den() == 1;
}

PythTriple RationalTriple::to_integral() const {
  if (!is_integral()) {
    throw Error(ErrorKind::PreconditionViolated, to_string(*this) + " is not integral");
  }
  return PythTriple(a_.get_num(), b_.get_num(), c_.get_num());
}

RationalTriple bs_product(const RationalTriple& s, const RationalTriple& t) {
  kernel::Triple<Rational> x{s.a(), s.b(), s.c()};
  kernel::Triple<Rational> y{t.a(), t.b(), t.c()};
  auto z = kernel::bs_mul(x, y);
  return RationalTriple(std::move(z.a), std::move(z.b), std::move(z.c));
}

RationalTriple identity() { return RationalTriple(1, 0, 1); }

RationalTriple inverse(const RationalTriple& t) {
  Rational aa = t.a() * t.a();
  return RationalTriple(1 / t.a(), -t.b() / aa, t.c() / aa);
}

RationalTriple power(const RationalTriple& t, const Integer& k) {
  RationalTriple base = sgn(k) < 0 ? inverse(t) : t;
  Integer e = abs(k);
  RationalTriple result = identity();
  while (sgn(e) > 0) {
    if (is_odd(e)) result = bs_product(result, base);
    e >>= 1;
    if (sgn(e) > 0) base = bs_product(base, base);
  }
  return result;
}

Klein klein_component(const RationalTriple& t) {
  if (sgn(t.c()) == 0) {
    throw Error(ErrorKind::ZeroHypotenuse, "triple with c = 0 has no Klein component");
  }
  return {sgn(t.a()) < 0, sgn(t.c()) < 0};
}

std::string to_string(Klein k) {
  return std::string(1, k.a_negative ? '-' : '+') + (k.c_negative ? '-' : '+');
}

Klein parse_klein(std::string_view text) {
  auto sign_of = [&](char ch) {
    if (ch == '+') return false;
    if (ch == '-') return true;
    throw Error(ErrorKind::Parse, "Klein signs must be two of '+'/'-', got '" + std::string(text) + "'");
  };
  if (text.size() != 2) sign_of('?');
  return {sign_of(text[0]), sign_of(text[1])};
}

NormalForm::NormalForm(Rational scalar_, ReducedFraction param_, Klein klein_)
    : scalar(canonical(std::move(scalar_))), param(std::move(param_)), klein(klein_) {
  if (sgn(scalar) <= 0) {
    throw Error(ErrorKind::PreconditionViolated, "normal form scalar must be positive");
  }
  if (!param.is_positive()) {
    throw Error(ErrorKind::PreconditionViolated, "normal form parameter must be positive");
  }
}

NormalForm normal_form(const RationalTriple& t) {
  Klein k = klein_component(t);
  // Strip the Klein factor: (a, b, c) -> (sa*a, sc*b, sc*c) has a, c > 0.
  Rational a = k.a_negative ? Rational(-t.a()) : t.a();
  Rational b = k.c_negative ? Rational(-t.b()) : t.b();
  Rational c = k.c_negative ? Rational(-t.c()) : t.c();
  ReducedFraction r(canonical(Rational((c + b) / a)));
  PythTriple base = from_param(r);
  return NormalForm(a / Rational(base.a()), std::move(r), k);
}

RationalTriple to_triple(const NormalForm& f) {
  PythTriple base = from_param(f.param);
  Rational sa = f.klein.a_negative ? -f.scalar : f.scalar;
  Rational sc = f.klein.c_negative ? -f.scalar : f.scalar;
  return RationalTriple(sa * base.a(), sc * base.b(), sc * base.c());
}

NormalForm semigroup_product(const NormalForm& p, const NormalForm& q) {
  auto term = kernel::semigroup_rule(p.param.num(), p.param.den(), q.param.num(), q.param.den());
  return NormalForm(p.scalar * q.scalar * Rational(term.multiplier), ReducedFraction(term.num, term.den),
                    p.klein * q.klein);
}

PythTriple normalize_primitive(const RationalTriple& t, SignConvention convention) {
  Integer common = lcm(lcm(t.a().get_den(), t.b().get_den()), t.c().get_den());
  Integer a = t.a().get_num() * (common / t.a().get_den());
  Integer b = t.b().get_num() * (common / t.b().get_den());
  Integer c = t.c().get_num() * (common / t.c().get_den());
  return normalize_primitive(PythTriple(std::move(a), std::move(b), std::move(c)), convention);
}

Rational class_scalar(const RationalTriple& t) {
  PythTriple base = normalize_primitive(t);
  return canonical(Rational(t.a() / base.a()));
}

PythTriple generator_for_prime(const Integer& p) {
  if (p == -1) return PythTriple(-1, 0, 1);
  if (p == 2) return PythTriple(4, 3, 5);
  if (p < 2 || !is_probable_prime(p)) {
    throw Error(ErrorKind::PreconditionViolated, p.get_str() + " is not a prime");
  }
  return PythTriple(p, (p * p - 1) / 2, (p * p + 1) / 2);
}

std::vector<GeneratorPower> generator_factorization(const ReducedFraction& r) {
  std::vector<GeneratorPower> out;
  if (sgn(r.num()) < 0) out.push_back({Integer(-1), generator_for_prime(-1), Integer(1)});
  for (const auto& [p, e] : factorize(r.num())) {
    out.push_back({p, generator_for_prime(p), Integer(e)});
  }
  for (const auto& [p, e] : factorize(r.den())) {
    out.push_back({p, generator_for_prime(p), -Integer(e)});
  }
  return out;
}

RationalTriple evaluate_factorization(const std::vector<GeneratorPower>& factors) {
  RationalTriple result = identity();
  for (const auto& f : factors) {
    result = bs_product(result, power(f.generator, f.exponent));
  }
  return result;
}

std::string to_string(const RationalTriple& t) {
  return "(" + to_string(t.a()) + "," + to_string(t.b()) + "," + to_string(t.c()) + ")";
}

RationalTriple parse_rational_triple(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch)) == 0) s.push_back(ch);
  }
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  std::vector<std::string_view> parts;
  std::string_view rest(s);
  for (;;) {
    auto comma = rest.find(',');
    parts.push_back(rest.substr(0, comma));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  if (parts.size() != 3) {
    throw Error(ErrorKind::Parse, "expected a triple 'a,b,c', got '" + std::string(text) + "'");
  }
  return RationalTriple(parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2]));
}

}  // namespace pythag
