#include <doctest.h>

#include "pythag/error.hpp"
#include "pythag/integer.hpp"

using namespace pythag;

TEST_CASE("gcd is nonnegative and gcd(0, x) = |x|") {
  CHECK(gcd(Integer(0), Integer(-7)) == 7);
  CHECK(gcd(Integer(-12), Integer(18)) == 6);
  CHECK(gcd(Integer(0), Integer(0)) == 0);
}

TEST_CASE("isqrt and perfect squares") {
  CHECK(isqrt(Integer(0)) == 0);
  CHECK(isqrt(Integer(24)) == 4);
  CHECK(isqrt(Integer(25)) == 5);
  CHECK(is_perfect_square(Integer(193) * 193));
  CHECK_FALSE(is_perfect_square(Integer(85 * 85 + 168 * 168)));
  CHECK_THROWS_AS(isqrt(Integer(-1)), Error);
}

TEST_CASE("factorize") {
  auto f = factorize(Integer(-360));
  REQUIRE(f.size() == 3);
  CHECK(f[0] == std::pair<Integer, unsigned>(2, 3));
  CHECK(f[1] == std::pair<Integer, unsigned>(3, 2));
  CHECK(f[2] == std::pair<Integer, unsigned>(5, 1));
  CHECK(factorize(Integer(1)).empty());
  Integer big("1000000007");
  auto g = factorize(big * 4);
  REQUIRE(g.size() == 2);
  CHECK(g[1].first == big);
  CHECK_THROWS_AS(factorize(Integer(0)), Error);
}

TEST_CASE("parsing and formatting") {
  CHECK(parse_integer("-123456789012345678901234567890") == Integer("-123456789012345678901234567890"));
  CHECK(parse_rational("6/-4") == Rational(-3, 2));
  CHECK(to_string(parse_rational("4/2")) == "2");
  CHECK(to_string(parse_rational("-3/6")) == "-1/2");
  for (const char* bad : {"", "-", "1.5", "3/", "/3", "1/0", "abc", "+"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_rational(bad), Error);
  }
  CHECK_THROWS_AS(to_int64(Integer("100000000000000000000")), Error);
}
