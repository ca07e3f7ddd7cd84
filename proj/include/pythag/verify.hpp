#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "pythag/group.hpp"

namespace pythag::verify {

struct SuiteResult {
  explicit SuiteResult(std::string name_) : name(std::move(name_)) {}

  std::string name;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0; }
  void check(bool ok, const std::string& what);
};

struct Options {
  std::int64_t c_max = 1000;
  int fraction_bound = 200;    // |num|, den for parametrization and involution sweeps
  int semigroup_bound = 60;    // entries of both fractions in the semigroup sweep
  int generation_bound = 100;  // p, q for decompose/evaluate
  int group_samples = 10'000;
  int pell_max_j = 60;
  std::uint64_t seed = 20240229;
};

/// from_param over reduced fractions vs. the enumeration oracle up to c_max:
/// injective, and the image equals the oracle set.
SuiteResult bijection(std::int64_t c_max);
/// Round trip, parity, height formula, sign law and the reciprocal law.
SuiteResult parametrization(int bound);
/// Associativity, identity, inverse, a-multiplicativity, homomorphism onto
/// Q^x and Klein multiplicativity on random rational triples.
SuiteResult group_laws(int samples, std::uint64_t seed);
/// Every pair of positive reduced fractions with entries <= bound: the
/// product rule agrees with the actual product (64-bit kernel, exact for
/// bound <= 2^15), plus the gcd(km, ln) = gcd(k,n) gcd(m,l) identity.
SuiteResult semigroup(int bound);
/// Primitive triples of m/n and n/m multiply to m^2 n^2 (mn odd) or
/// 4 m^2 n^2 (mn even) times (1,0,1), for 1 <= m, n <= bound.
SuiteResult inverse_pairs(int bound);
/// cayley is an involution, has no fixed point, and conjugates swap.
SuiteResult involution(int bound);
/// decompose/evaluate round trip up to scalar class for r = +-p/q.
SuiteResult generation(int bound);
/// Pell identities, parities and agreement with ring powers for 1 <= j <= max_j.
SuiteResult pell(int max_j);
/// x^2 - 2y^2 mod 8 avoids 3 and 5; D = 3, 5 mod 8 is rejected; the |a-b|
/// families match the oracle filtered by |a-b| = D for odd D <= 49.
SuiteResult differences(std::int64_t c_max);
/// c - 2a families and unit3_pair against direct evaluation.
SuiteResult cminus2a(int bound);

std::vector<SuiteResult> run_all(const Options& options);

/// Random element of the rational triple group: a scaled, sign-adjusted
/// primitive triple.
RationalTriple random_rational_triple(std::mt19937_64& rng, int param_bound = 60, int scalar_bound = 30);

}  // namespace pythag::verify
