#include <doctest.h>

#include <algorithm>
#include <random>

#include "pythag/error.hpp"
#include "pythag/triples.hpp"
#include "pythag/verify.hpp"

using namespace pythag;

namespace {

PythTriple T(long a, long b, long c) { return PythTriple(a, b, c); }
ReducedFraction F(long m, long n = 1) { return ReducedFraction(Integer(m), Integer(n)); }

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Parse;
}

}  // namespace

TEST_CASE("make_triple") {
  CHECK(make_triple(3, 4, 5) == T(3, 4, 5));
  CHECK(make_triple(0, 0, 0) == T(0, 0, 0));
  CHECK(kind_of([] { make_triple(3, 4, 6); }) == ErrorKind::NotPythagorean);
}

TEST_CASE("ReducedFraction normalizes") {
  CHECK(F(6, -4) == F(-3, 2));
  CHECK(F(-3, 2).num() == -3);
  CHECK(F(-3, 2).den() == 2);
  CHECK(kind_of([] { F(0, 5); }) == ErrorKind::ZeroParameter);
  CHECK(kind_of([] { F(1, 0); }) == ErrorKind::PreconditionViolated);
  CHECK(parse_fraction("12/5") == F(12, 5));
  CHECK(parse_fraction("-7") == F(-7));
  CHECK(to_string(F(2)) == "2/1");
  CHECK(to_display_string(F(2)) == "2");
}

TEST_CASE("from_param") {
  CHECK(from_param(F(2)) == T(4, 3, 5));
  CHECK(from_param(F(12, 5)) == T(120, 119, 169));
  CHECK(from_param(F(11, 3)) == T(33, 56, 65));
  CHECK(from_param(F(1)) == T(1, 0, 1));
  CHECK(from_param(F(-2)) == T(-4, 3, 5));
  CHECK(from_param(F(1, 2)) == T(4, -3, 5));
  CHECK(from_param(F(-1)) == T(-1, 0, 1));
}

TEST_CASE("to_param") {
  CHECK(to_param(T(4, 3, 5)) == F(2));
  CHECK(to_param(T(20, 21, 29)) == F(5, 2));
  CHECK(kind_of([] { to_param(T(0, 3, 3)); }) == ErrorKind::ZeroLeg);
  CHECK(to_param(T(-1, 0, -1)) == F(1));
  // Non-primitive and negative-c triples land on the same class parameter.
  CHECK(to_param(T(8, 6, 10)) == F(2));
  CHECK(to_param(T(-4, -3, -5)) == F(2));
}

TEST_CASE("etale coordinates") {
  CHECK(to_etale(T(4, 3, 5)) == EtaleUnit(Rational(5, 4), Rational(3, 4)));
  CHECK(to_etale(T(1, 0, 1)) == EtaleUnit(1, 0));
  CHECK(to_etale(T(-1, 0, 1)) == EtaleUnit(-1, 0));
  CHECK(etale_from_param(F(2)) == EtaleUnit(Rational(5, 4), Rational(3, 4)));
  CHECK(etale_from_param(F(2)) == to_etale(from_param(F(2))));
  CHECK(etale_from_param(F(1)) == EtaleUnit(1, 0));
  CHECK(param_from_etale(EtaleUnit(Rational(5, 4), Rational(3, 4))) == F(2));
  CHECK_THROWS_AS(EtaleUnit(1, 1), Error);
}

TEST_CASE("height, excess and increment") {
  CHECK(height(T(4, 3, 5)) == 2);
  CHECK(height(T(3, 4, 5)) == 1);
  CHECK(height(T(3, -4, 5)) == 9);
  CHECK(excess(T(4, 3, 5)) == 2);
  CHECK(increment(T(4, 3, 5)) == 1);
  CHECK(excess(T(3, 4, 5)) == 2);
  CHECK(increment(T(3, 4, 5)) == 2);
  CHECK(kind_of([] { increment(T(1, 0, 1)); }) == ErrorKind::OutOfRegime);
  CHECK(kind_of([] { increment(T(6, 8, 10)); }) == ErrorKind::OutOfRegime);
  CHECK(kind_of([] { increment(T(4, -3, 5)); }) == ErrorKind::OutOfRegime);
}

TEST_CASE("normalize_primitive") {
  CHECK(normalize_primitive(T(16, 0, 16)) == T(1, 0, 1));
  CHECK(normalize_primitive(T(6, 8, 10)) == T(3, 4, 5));
  CHECK(normalize_primitive(T(-3, -4, -5)) == T(3, 4, 5));
  CHECK(kind_of([] { normalize_primitive(T(0, 0, 0)); }) == ErrorKind::ZeroTriple);
  CHECK(normalize_primitive(T(-6, 8, 10), SignConvention::positive_a) == T(3, -4, -5));
  CHECK(normalize_primitive(T(0, 2, -2), SignConvention::positive_a) == T(0, -1, 1));
}

TEST_CASE("oracle_enumerate") {
  std::vector<PythTriple> five = {T(1, 0, 1), T(-1, 0, 1), T(3, 4, 5), T(4, 3, 5), T(-3, 4, 5),
                                  T(3, -4, 5), T(-4, 3, 5), T(4, -3, 5), T(-3, -4, 5), T(-4, -3, 5)};
  std::sort(five.begin(), five.end());
  CHECK(oracle_enumerate(5) == five);
  auto thirteen = oracle_enumerate(13);
  CHECK(std::count(thirteen.begin(), thirteen.end(), T(5, 12, 13)) == 1);
  CHECK(std::count(thirteen.begin(), thirteen.end(), T(12, 5, 13)) == 1);
  CHECK(kind_of([] { oracle_enumerate(0); }) == ErrorKind::PreconditionViolated);
  CHECK(oracle_enumerate(400) == oracle_enumerate_scan(400));
}

TEST_CASE("r = 19/5 gives (95,168,193)") {
  // (85,168,193) circulates as a misprint of this entry; 85^2 + 168^2 != 193^2.
  CHECK(from_param(F(19, 5)) == T(95, 168, 193));
  CHECK(kind_of([] { make_triple(85, 168, 193); }) == ErrorKind::NotPythagorean);
}

TEST_CASE("parametrization laws for |num|, den <= 1000") {
  auto result = verify::parametrization(1000);
  INFO(result.first_failure);
  CHECK(result.passed());
  CHECK(result.checks > 1'000'000);
}

TEST_CASE("oracle bijection for c <= 20000") {
  auto result = verify::bijection(20000);
  INFO(result.first_failure);
  CHECK(result.passed());
}
