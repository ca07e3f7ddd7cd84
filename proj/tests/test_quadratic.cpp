#include <doctest.h>

#include <algorithm>
#include <random>

#include "pythag/error.hpp"
#include "pythag/involution.hpp"
#include "pythag/quadratic.hpp"
#include "pythag/verify.hpp"

using namespace pythag;

namespace {

ReducedFraction F(long m, long n = 1) { return ReducedFraction(Integer(m), Integer(n)); }
PythTriple T(long a, long b, long c) { return PythTriple(a, b, c); }
QuadElem Q(std::int64_t d, long x, long y) { return QuadElem{d, x, y}; }

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Parse;
}

bool contains(const std::vector<DiffFamilyEntry>& entries, const PythTriple& t) {
  return std::any_of(entries.begin(), entries.end(), [&](const auto& e) { return e.triple == t; });
}

bool contains_image(const std::vector<DiffFamilyEntry>& entries, const PythTriple& t) {
  return std::any_of(entries.begin(), entries.end(), [&](const auto& e) { return e.image == t; });
}

}  // namespace

TEST_CASE("ring arithmetic") {
  CHECK(quad_mul(Q(2, 1, 1), Q(2, 1, 1)) == Q(2, 3, 2));
  CHECK(quad_norm(Q(2, 1, 1)) == -1);
  CHECK(quad_norm(Q(3, 2, 1)) == 1);
  CHECK(quad_norm(Q(2, 3, -1)) == 7);
  CHECK(quad_norm(Q(2, -1, 2)) == -7);
  CHECK(kind_of([] { quad_mul(Q(2, 1, 1), Q(3, 1, 1)); }) == ErrorKind::MixedDiscriminant);
  CHECK(quad_pow(Q(2, 1, 1), 5) == Q(2, 41, 29));
  CHECK(real_less(Q(2, 3, -1), Q(2, -1, 2)));  // 1.586 < 1.828
  CHECK_FALSE(real_less(Q(2, 1, 1), Q(2, 1, 1)));
  CHECK(to_string(Q(2, 3, -1)) == "3-1sqrt2");
}

TEST_CASE("norm is multiplicative on random elements") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> coord(-1'000'000'000, 1'000'000'000);
  for (std::int64_t d : {2, 3}) {
    for (int i = 0; i < 10'000; ++i) {
      QuadElem u{d, coord(rng), coord(rng)};
      QuadElem v{d, coord(rng), coord(rng)};
      REQUIRE(quad_norm(quad_mul(u, v)) == quad_norm(u) * quad_norm(v));
    }
  }
}

TEST_CASE("unit sequences") {
  CHECK(unit_seq(UnitKind::st, 5) == std::pair<Integer, Integer>(41, 29));
  CHECK(unit_seq(UnitKind::st, 0) == std::pair<Integer, Integer>(1, 0));
  CHECK(unit_seq(UnitKind::xieta, 3) == std::pair<Integer, Integer>(26, 15));
  CHECK(unit_seq(UnitKind::lambdamu, 4) == std::pair<Integer, Integer>(71, 41));
  CHECK(unit_seq(UnitKind::lambdamu, 1) == std::pair<Integer, Integer>(1, 1));
  CHECK(unit_seq(UnitKind::st, -2) == std::pair<Integer, Integer>(-3, 2));
  // Up to the global sign, the reflected term is the inverse power.
  QuadElem back = quad_mul(quad_pow(Q(2, 1, 1), 2), unit_seq_element(UnitKind::st, -2));
  CHECK((back == Q(2, 1, 0) || back == Q(2, -1, 0)));
  CHECK(quad_mul(quad_pow(Q(3, 2, 1), 4), unit_seq_element(UnitKind::xieta, -4)) == Q(3, 1, 0));
  CHECK(parse_unit_kind("xieta") == UnitKind::xieta);
  CHECK(kind_of([] { parse_unit_kind("pell"); }) == ErrorKind::Parse);
}

TEST_CASE("sequence values beyond 64 bits") {
  auto [s, t] = unit_seq(UnitKind::st, 60);
  CHECK(s.get_str() == "46292552162781456490001");
  CHECK(s * s - 2 * t * t == 1);
}

TEST_CASE("unitinv_pair") {
  UnitInvPair p = unitinv_pair(1, 1);
  CHECK(p.first == F(3));
  CHECK(p.second == F(2));
  CHECK(from_param(p.second) == T(4, 3, 5));
  CHECK(p.diff == 1);
  UnitInvPair q = unitinv_pair(3, 1);
  CHECK(q.first == F(5, 3));
  CHECK(q.second == F(4));
  CHECK(q.triple == T(15, 8, 17));
  CHECK(q.diff == 7);
  UnitInvPair r = unitinv_pair(5, 12);
  CHECK(r.first == F(29, 5));
  CHECK(r.second == F(17, 12));
  CHECK(r.diff == 263);
  CHECK(abs(Integer(r.triple.a() - r.triple.b())) == 263);
  CHECK(kind_of([] { unitinv_pair(2, 4); }) == ErrorKind::PreconditionViolated);
}

TEST_CASE("abclose_pair") {
  AbClosePair two = abclose_pair(2);
  CHECK(two.t_quotient == F(5, 2));
  CHECK(two.s_quotient == F(7, 3));
  CHECK(two.triple == T(20, 21, 29));
  AbClosePair three = abclose_pair(3);
  CHECK(three.t_quotient == F(12, 5));
  CHECK(three.s_quotient == F(17, 7));
  CHECK(three.triple == T(120, 119, 169));
  AbClosePair five = abclose_pair(5);
  CHECK(five.t_quotient == F(70, 29));
  CHECK(five.s_quotient == F(99, 41));
  CHECK(five.triple == T(4060, 4059, 5741));
  CHECK(kind_of([] { abclose_pair(0); }) == ErrorKind::PreconditionViolated);
}

TEST_CASE("family_diff_ab") {
  auto one = family_diff_ab(1, 3);
  REQUIRE(one.size() == 3);
  CHECK(one[0].triple == T(4, 3, 5));
  CHECK(one[1].triple == T(20, 21, 29));
  CHECK(one[2].triple == T(120, 119, 169));

  auto seven = family_diff_ab(7, 5);
  for (auto t : {T(-4, 3, 5), T(4, -3, 5), T(12, 5, 13), T(8, 15, 17), T(48, 55, 73)}) {
    CAPTURE(to_string(t));
    CHECK(contains(seven, t));
    CHECK(contains_image(seven, swap(t)));
  }
  for (const auto& e : seven) {
    CHECK(e.diff == 7);
    CHECK(cayley(e.r) == e.image_r);
    CHECK(swap(e.triple) == e.image);
  }
  auto bases = diff_ab_bases(7);
  REQUIRE(bases.size() == 2);
  // Ordered by the first positive orbit element: 1+2sqrt2, then 3+sqrt2.
  CHECK(bases[0] == Q(2, 3, -1));
  CHECK(bases[1] == Q(2, -1, 2));

  CHECK(kind_of([] { family_diff_ab(3, 1); }) == ErrorKind::NoSolution);
  CHECK(kind_of([] { family_diff_ab(5, 1); }) == ErrorKind::NoSolution);
  CHECK(kind_of([] { family_diff_ab(4, 1); }) == ErrorKind::InvalidDifference);
  CHECK(kind_of([] { family_diff_ab(-7, 1); }) == ErrorKind::InvalidDifference);
  // 15 = 7 mod 8 but 15 is not a norm of a coprime element.
  CHECK(kind_of([] { family_diff_ab(15, 1); }) == ErrorKind::NoSolution);
}

TEST_CASE("unit3_pair") {
  Unit3Pair a = unit3_pair(2, 1);
  CHECK(a.r_k == F(4));
  CHECK(a.r_m == F(7, 2));
  CHECK(a.t_k == T(8, 15, 17));
  CHECK(a.c_minus_2a == 1);
  CHECK(a.t_m == T(28, 45, 53));
  CHECK(a.h_minus_2f == -3);
  Unit3Pair b = unit3_pair(1, 1);
  CHECK(b.r_k == F(3));
  CHECK(b.r_m == F(5));
  CHECK(b.t_k == T(3, 4, 5));
  CHECK(b.c_minus_2a == -1);
  CHECK(b.t_m == T(5, 12, 13));
  CHECK(b.h_minus_2f == 3);
  Unit3Pair c = unit3_pair(1, 2);
  CHECK(c.r_k == F(5, 2));
  CHECK(c.t_k == T(20, 21, 29));
  CHECK(c.c_minus_2a == -11);
  CHECK(kind_of([] { unit3_pair(3, 1); }) == ErrorKind::PreconditionViolated);
}

TEST_CASE("c-2a families") {
  CHECK(cminus2a_family(CMinus2aKind::plus1, 2).r == F(15, 4));
  CHECK(cminus2a_family(CMinus2aKind::plus1, 2).triple == T(120, 209, 241));
  CHECK(cminus2a_family(CMinus2aKind::minus3, 3).r == F(26, 7));
  CHECK(cminus2a_family(CMinus2aKind::minus3, 3).triple == T(364, 627, 725));
  CHECK(cminus2a_family(CMinus2aKind::minus1, 3).r == F(11, 3));
  CHECK(cminus2a_family(CMinus2aKind::minus1, 3).triple == T(33, 56, 65));
  CHECK(cminus2a_family(CMinus2aKind::plus3, 4).r == F(71, 19));
  CHECK(cminus2a_family(CMinus2aKind::plus3, 4).triple == T(1349, 2340, 2701));
  CHECK(cminus2a_family(CMinus2aKind::minus1, 4).r == F(41, 11));
  CHECK(cminus2a_family(CMinus2aKind::minus1, 4).triple == T(451, 780, 901));
  // Not the misprinted (85,168,193), which is not Pythagorean.
  CHECK(cminus2a_family(CMinus2aKind::plus3, 3).triple == T(95, 168, 193));
  CHECK(cminus2a_family(CMinus2aKind::minus1, 1).degenerate);
  CHECK(cminus2a_kind_for(-3) == CMinus2aKind::minus3);
  CHECK(kind_of([] { cminus2a_kind_for(2); }) == ErrorKind::PreconditionViolated);
  CHECK(kind_of([] { cminus2a_family(CMinus2aKind::plus1, 0); }) == ErrorKind::PreconditionViolated);
}

TEST_CASE("fundamental_unit") {
  CHECK(fundamental_unit(2) == Q(2, 1, 1));
  CHECK(fundamental_unit(3) == Q(3, 2, 1));
  CHECK(fundamental_unit(7) == Q(7, 8, 3));
  CHECK(fundamental_unit(6) == Q(6, 5, 2));
  CHECK(kind_of([] { fundamental_unit(5); }) == ErrorKind::HalfIntegralUnit);
  CHECK(kind_of([] { fundamental_unit(13); }) == ErrorKind::HalfIntegralUnit);
  CHECK(fundamental_unit(17) == Q(17, 4, 1));
  CHECK(kind_of([] { fundamental_unit(4); }) == ErrorKind::PreconditionViolated);
  CHECK(kind_of([] { fundamental_unit(1); }) == ErrorKind::PreconditionViolated);
  CHECK(kind_of([] { fundamental_unit(94, 100); }) == ErrorKind::SearchExceeded);
}

TEST_CASE("Pell, difference and c-2a suites") {
  for (const auto& result : {verify::pell(60), verify::differences(20000), verify::cminus2a(60)}) {
    INFO(result.name << ": " << result.first_failure);
    CHECK(result.passed());
  }
}
