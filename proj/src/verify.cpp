#include "pythag/verify.hpp"

#include <algorithm>
#include <numeric>

#include "pythag/error.hpp"
#include "pythag/involution.hpp"
#include "pythag/kernels.hpp"
#include "pythag/quadratic.hpp"

namespace pythag::verify {

void SuiteResult::check(bool ok, const std::string& what) {
  ++checks;
  if (!ok) {
    if (failures == 0) first_failure = what;
    ++failures;
  }
}

namespace {

template <class F>
void for_each_fraction(int bound, bool with_negative, F&& f) {
  for (int n = 1; n <= bound; ++n) {
    for (int m = with_negative ? -bound : 1; m <= bound; ++m) {
      if (m == 0 || std::gcd(m, n) != 1) continue;
      f(m, n);
    }
  }
}

PythTriple scaled(const PythTriple& t, const Integer& k) { return PythTriple(k * t.a(), k * t.b(), k * t.c()); }

std::vector<int> prime_counts(int bound) {
  std::vector<int> pi(static_cast<std::size_t>(bound) + 1, 0);
  std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
  for (int i = 2; i <= bound; ++i) {
    pi[i] = pi[i - 1];
    if (composite[i]) continue;
    ++pi[i];
    for (long j = static_cast<long>(i) * i; j <= bound; j += i) composite[j] = true;
  }
  return pi;
}

}  // namespace

RationalTriple random_rational_triple(std::mt19937_64& rng, int param_bound, int scalar_bound) {
  std::uniform_int_distribution<int> param(-param_bound, param_bound);
  std::uniform_int_distribution<int> den(1, param_bound);
  std::uniform_int_distribution<int> scalar_num(1, scalar_bound);
  std::uniform_int_distribution<int> coin(0, 1);
  int m = 0;
  while (m == 0) m = param(rng);
  PythTriple base = from_param(ReducedFraction(m, den(rng)));
  Rational t(scalar_num(rng), scalar_num(rng));
  t.canonicalize();
  if (coin(rng) != 0) t = -t;
  return RationalTriple(t * base.a(), t * base.b(), t * base.c());
}

SuiteResult bijection(std::int64_t c_max) {
  SuiteResult result{"oracle bijection (c <= " + std::to_string(c_max) + ")"};
  std::vector<PythTriple> oracle = oracle_enumerate(c_max);
  std::vector<PythTriple> image;
  // c >= max(m^2, n^2)/2, so |m|, n <= sqrt(2 c_max).
  const int bound = static_cast<int>(isqrt(Integer(static_cast<long>(2 * c_max))).get_si());
  for_each_fraction(bound, true, [&](int m, int n) {
    PythTriple t = from_param(ReducedFraction(m, n));
    if (t.c() > c_max) return;
    result.check(t.is_primitive() && sgn(t.c()) > 0 && sgn(t.a()) != 0,
                 "from_param(" + std::to_string(m) + "/" + std::to_string(n) + ") not primitive with c > 0");
    image.push_back(std::move(t));
  });
  std::sort(image.begin(), image.end());
  auto dup = std::adjacent_find(image.begin(), image.end());
  result.check(dup == image.end(), dup == image.end() ? "" : "two fractions give " + to_string(*dup));
  std::vector<PythTriple> missing;
  std::set_difference(oracle.begin(), oracle.end(), image.begin(), image.end(), std::back_inserter(missing));
  std::vector<PythTriple> extra;
  std::set_difference(image.begin(), image.end(), oracle.begin(), oracle.end(), std::back_inserter(extra));
  for (const auto& t : missing) result.check(false, "oracle triple " + to_string(t) + " not hit by from_param");
  for (const auto& t : extra) result.check(false, "from_param hits " + to_string(t) + " outside the oracle");
  result.check(image.size() == oracle.size(), "image size " + std::to_string(image.size()) + " vs oracle size " +
                                                  std::to_string(oracle.size()));
  return result;
}

SuiteResult parametrization(int bound) {
  SuiteResult result{"parametrization laws (|m|, n <= " + std::to_string(bound) + ")"};
  for_each_fraction(bound, true, [&](int m, int n) {
    const std::string tag = std::to_string(m) + "/" + std::to_string(n);
    ReducedFraction r(m, n);
    PythTriple t = from_param(r);
    const bool mn_odd = ((m * n) & 1) != 0;
    result.check(to_param(t) == r, "round trip fails at " + tag);
    result.check(t.is_primitive() && sgn(t.c()) > 0, "not primitive with c > 0 at " + tag);
    result.check(is_odd(t.a()) == mn_odd, "parity of a wrong at " + tag);
    result.check(height(t) == (mn_odd ? 1 : 2) * n * n, "height formula fails at " + tag);
    result.check((m > 0) == (sgn(t.a()) * sgn(t.c()) > 0), "sign law fails at " + tag);
    result.check(from_param(r.reciprocal()) == PythTriple(t.a(), -t.b(), t.c()), "reciprocal law fails at " + tag);
    result.check(normalize_primitive(scaled(t, -7)) == t && to_param(scaled(t, -7)) == r,
                 "scaling by -7 changes the class at " + tag);
    result.check(to_etale(t) == etale_from_param(r) && param_from_etale(etale_from_param(r)) == r,
                 "etale coordinates disagree at " + tag);
  });
  return result;
}

SuiteResult group_laws(int samples, std::uint64_t seed) {
  SuiteResult result{"group laws (" + std::to_string(samples) + " random samples)"};
  std::mt19937_64 rng(seed);
  const RationalTriple e = identity();
  for (int i = 0; i < samples; ++i) {
    RationalTriple s = random_rational_triple(rng);
    RationalTriple t = random_rational_triple(rng);
    RationalTriple u = random_rational_triple(rng);
    const std::string tag = " at " + to_string(s) + ", " + to_string(t);
    RationalTriple st = bs_product(s, t);
    result.check(bs_product(st, u) == bs_product(s, bs_product(t, u)), "associativity" + tag);
    result.check(bs_product(s, e) == s && bs_product(e, s) == s, "identity" + tag);
    result.check(bs_product(s, inverse(s)) == e, "inverse" + tag);
    result.check(st == bs_product(t, s), "commutativity" + tag);
    result.check(st.a() == s.a() * t.a(), "a-multiplicativity" + tag);
    ReducedFraction rs = to_param(normalize_primitive(s));
    ReducedFraction rt = to_param(normalize_primitive(t));
    result.check(to_param(normalize_primitive(st)) == ReducedFraction(rs.num() * rt.num(), rs.den() * rt.den()),
                 "homomorphism to Q^x" + tag);
    result.check(klein_component(st) == klein_component(s) * klein_component(t), "Klein homomorphism" + tag);
    result.check(to_triple(normal_form(s)) == s, "normal form round trip" + tag);
    result.check(semigroup_product(normal_form(s), normal_form(t)) == normal_form(st), "semigroup rule" + tag);
    RationalTriple si(normalize_primitive(s));
    RationalTriple ti(normalize_primitive(t));
    result.check(bs_product(si, ti).is_integral(), "integral closure" + tag);
  }
  return result;
}

SuiteResult semigroup(int bound) {
  SuiteResult result{"semigroup product rule (entries <= " + std::to_string(bound) + ")"};
  if (bound > 4096) throw Error(ErrorKind::PreconditionViolated, "semigroup sweep is exact only up to 4096");
  using kernel::Triple;
  struct Entry {
    std::int64_t m, n;
    Triple<std::int64_t> t;
  };
  std::vector<Entry> fractions;
  for_each_fraction(bound, false, [&](int m, int n) {
    fractions.push_back({m, n, kernel::primitive_triple<std::int64_t>(m, n)});
  });
  for (std::size_t i = 0; i < fractions.size(); ++i) {
    const Entry& x = fractions[i];
    for (std::size_t j = i; j < fractions.size(); ++j) {
      const Entry& y = fractions[j];
      auto term = kernel::semigroup_rule<std::int64_t>(x.m, x.n, y.m, y.n);
      auto product = kernel::bs_mul(x.t, y.t);
      auto base = kernel::primitive_triple<std::int64_t>(term.num, term.den);
      Triple<std::int64_t> expected{};
      bool overflow = __builtin_mul_overflow(term.multiplier, base.a, &expected.a) ||
                      __builtin_mul_overflow(term.multiplier, base.b, &expected.b) ||
                      __builtin_mul_overflow(term.multiplier, base.c, &expected.c);
      bool ok = !overflow && product == expected &&
                term.common == std::gcd(y.m, x.n) * std::gcd(x.m, y.n);
      ++result.checks;
      if (!ok) {
        if (result.failures == 0) {
          result.first_failure = "product of " + std::to_string(x.m) + "/" + std::to_string(x.n) + " and " +
                                 std::to_string(y.m) + "/" + std::to_string(y.n);
        }
        ++result.failures;
      }
    }
  }
  return result;
}

SuiteResult inverse_pairs(int bound) {
  SuiteResult result{"inverse pairs (m, n <= " + std::to_string(bound) + ")"};
  for_each_fraction(bound, false, [&](int m, int n) {
    const std::string tag = std::to_string(m) + "/" + std::to_string(n);
    Integer mn = Integer(m) * n;
    Integer expected = mn * mn * (is_odd(mn) ? 1 : 4);
    ReducedFraction r(m, n);
    NormalForm product = semigroup_product(NormalForm(1, r), NormalForm(1, r.reciprocal()));
    result.check(product.scalar == expected && product.param == ReducedFraction(Integer(1)), "rule at " + tag);
    RationalTriple actual = bs_product(from_param(r), from_param(r.reciprocal()));
    result.check(actual == RationalTriple(expected, 0, expected), "product at " + tag);
  });
  return result;
}

SuiteResult involution(int bound) {
  SuiteResult result{"involution (|num|, den <= " + std::to_string(bound) + ")"};
  for_each_fraction(bound, true, [&](int m, int n) {
    if (n == 1 && (m == 1 || m == -1)) return;
    const std::string tag = std::to_string(m) + "/" + std::to_string(n);
    ReducedFraction r(m, n);
    ReducedFraction image = cayley(r);
    PythTriple t = from_param(r);
    result.check(cayley(image) == r, "cayley not involutive at " + tag);
    result.check(image != r, "fixed point at " + tag);
    PythTriple swapped = from_param(image);
    result.check(swapped == swap(t), "conjugacy fails at " + tag);
    result.check(cayley_etale(to_etale(t)) == to_etale(swapped), "etale involution disagrees at " + tag);
  });
  return result;
}

SuiteResult generation(int bound) {
  SuiteResult result{"generation by (4,3,5), (-1,0,1) and swap (p, q <= " + std::to_string(bound) + ")"};
  std::vector<int> pi = prime_counts(bound);
  Evaluator evaluate_word;
  for_each_fraction(bound, true, [&](int m, int n) {
    const std::string tag = std::to_string(m) + "/" + std::to_string(n);
    ReducedFraction r(m, n);
    GenWord w = decompose(r);
    result.check(normalize_primitive(evaluate_word(w)) == from_param(r), "round trip fails at " + tag);
    int largest = 1;
    for (int x : {std::abs(m), n}) {
      for (const auto& [p, e] : factorize(Integer(x))) largest = std::max(largest, static_cast<int>(p.get_si()));
    }
    result.check(inv_depth(w) <= pi[largest], "recursion deeper than the prime count at " + tag);
  });
  return result;
}

SuiteResult pell(int max_j) {
  SuiteResult result{"Pell identities (|j| <= " + std::to_string(max_j) + ")"};
  const QuadElem one_plus_sqrt2{2, 1, 1};
  const QuadElem two_plus_sqrt3{3, 2, 1};
  const QuadElem sqrt3_minus_1{3, -1, 1};
  for (int j = -max_j; j <= max_j; ++j) {
    const std::string tag = " at j = " + std::to_string(j);
    auto [s, t] = unit_seq(UnitKind::st, j);
    auto [xi, eta] = unit_seq(UnitKind::xieta, j);
    auto [lambda, mu] = unit_seq(UnitKind::lambdamu, j);
    const int parity = j & 1;
    result.check(s * s - 2 * t * t == (parity ? -1 : 1), "s^2 - 2t^2" + tag);
    result.check(is_odd(s) && (is_odd(t) ? 1 : 0) == parity, "s, t parity" + tag);
    result.check(xi * xi - 3 * eta * eta == 1 && is_even(Integer(xi * eta)), "xi, eta" + tag);
    result.check(lambda * lambda - 3 * mu * mu == -2 && is_odd(lambda) && is_odd(mu), "lambda, mu" + tag);
    if (j >= 1) {
      auto power = static_cast<std::uint64_t>(j);
      result.check(quad_pow(one_plus_sqrt2, power) == QuadElem{2, s, t}, "(1+sqrt2)^j" + tag);
      result.check(quad_pow(two_plus_sqrt3, power) == QuadElem{3, xi, eta}, "(2+sqrt3)^j" + tag);
      result.check(quad_mul(sqrt3_minus_1, quad_pow(two_plus_sqrt3, power)) == QuadElem{3, lambda, mu},
                   "(sqrt3-1)(2+sqrt3)^j" + tag);
    }
  }
  for (int j = 1; j <= std::min(max_j, 30); ++j) {
    AbClosePair pair = abclose_pair(j);
    const auto& t = pair.triple;
    result.check(abs(Integer(t.a() - t.b())) == 1, "|a-b| != 1 at j = " + std::to_string(j));
    result.check(cayley(pair.t_quotient) == pair.s_quotient, "quotients not swapped at j = " + std::to_string(j));
    result.check(from_param(pair.s_quotient) == swap(t), "triples not swapped at j = " + std::to_string(j));
  }
  return result;
}

SuiteResult differences(std::int64_t c_max) {
  SuiteResult result{"|a-b| families (c <= " + std::to_string(c_max) + ")"};
  for (int x = 0; x <= 200; ++x) {
    for (int y = 0; y <= 200; ++y) {
      int residue = ((x * x - 2 * y * y) % 8 + 8) % 8;
      result.check(residue != 3 && residue != 5, "norm residue at " + std::to_string(x) + "," + std::to_string(y));
    }
  }
  for (int D = 1; D <= 100; D += 2) {
    if (D % 8 != 3 && D % 8 != 5) continue;
    bool rejected = false;
    try {
      family_diff_ab(D, 1);
    } catch (const Error& e) {
      rejected = e.kind() == ErrorKind::NoSolution;
    }
    result.check(rejected, "D = " + std::to_string(D) + " not rejected");
  }
  std::vector<PythTriple> oracle = oracle_enumerate(c_max);
  for (int D = 1; D <= 49; D += 2) {
    std::vector<PythTriple> expected;
    // (+-1,0,1) has |a-b| = 1 but no swap image; the family leaves it out.
    for (const auto& t : oracle) {
      if (sgn(t.b()) != 0 && abs(Integer(t.a() - t.b())) == D) expected.push_back(t);
    }
    std::vector<PythTriple> produced;
    try {
      produced = diff_ab_triples_up_to(D, c_max);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NoSolution) throw;
    }
    result.check(produced == expected, "family for D = " + std::to_string(D) + " has " +
                                           std::to_string(produced.size()) + " triples, oracle " +
                                           std::to_string(expected.size()));
  }
  for (int n = 1; n <= 100; ++n) {
    for (int l = 1; l <= 100; ++l) {
      if (std::gcd(n, l) != 1) continue;
      UnitInvPair pair = unitinv_pair(n, l);
      const auto& t = pair.triple;
      result.check(abs(Integer(t.a() - t.b())) == pair.diff && cayley(pair.first) == pair.second,
                   "unitinv_pair(" + std::to_string(n) + ", " + std::to_string(l) + ")");
    }
  }
  return result;
}

SuiteResult cminus2a(int bound) {
  SuiteResult result{"c-2a families (n, l <= " + std::to_string(bound) + ")"};
  for (auto kind : {CMinus2aKind::plus1, CMinus2aKind::minus3, CMinus2aKind::minus1, CMinus2aKind::plus3}) {
    for (int j = 1; j <= 25; ++j) {
      CMinus2aEntry e = cminus2a_family(kind, j);
      result.check(e.value == target(kind) && e.value == e.triple.c() - 2 * e.triple.a(),
                   "c-2a family " + std::to_string(target(kind)) + " at j = " + std::to_string(j));
    }
  }
  for (int n = 1; n <= bound; ++n) {
    if (n % 3 == 0) continue;
    for (int l = 1; l <= bound; ++l) {
      if (std::gcd(n, l) != 1) continue;
      Unit3Pair p = unit3_pair(n, l);
      result.check(p.t_k.c() - 2 * p.t_k.a() == p.c_minus_2a && p.t_m.c() - 2 * p.t_m.a() == p.h_minus_2f,
                   "unit3_pair(" + std::to_string(n) + ", " + std::to_string(l) + ")");
    }
  }
  return result;
}

std::vector<SuiteResult> run_all(const Options& options) {
  return {
      bijection(options.c_max),
      parametrization(options.fraction_bound),
      group_laws(options.group_samples, options.seed),
      semigroup(options.semigroup_bound),
      inverse_pairs(50),
      involution(options.fraction_bound),
      generation(options.generation_bound),
      pell(options.pell_max_j),
      differences(std::min<std::int64_t>(options.c_max, 100'000)),
      cminus2a(100),
  };
}

}  // namespace pythag::verify
