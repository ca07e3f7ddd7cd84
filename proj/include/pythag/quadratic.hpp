#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pythag/integer.hpp"
#include "pythag/triples.hpp"

namespace pythag {

/// x + y*sqrt(d) in Z[sqrt(d)], d a positive non-square.
struct QuadElem {
  std::int64_t d;
  Integer x;
  Integer y;

  friend bool operator==(const QuadElem&, const QuadElem&) = default;
};

/// Throws Error(MixedDiscriminant) when the two d differ.
QuadElem quad_mul(const QuadElem& u, const QuadElem& v);
/// x^2 - d*y^2; multiplicative.
Integer quad_norm(const QuadElem& u);
QuadElem quad_pow(const QuadElem& u, std::uint64_t k);
/// Exact comparison of the real numbers x + y*sqrt(d).
bool real_less(const QuadElem& u, const QuadElem& v);

std::string to_string(const QuadElem& u);

enum class UnitKind {
  st,        // (1+sqrt2)^j = s_j + t_j sqrt2
  xieta,     // (2+sqrt3)^j = xi_j + eta_j sqrt3
  lambdamu,  // (sqrt3-1)(2+sqrt3)^j = lambda_j + mu_j sqrt3
};

std::int64_t discriminant(UnitKind kind);
std::string to_string(UnitKind kind);
UnitKind parse_unit_kind(std::string_view text);

/// Coefficients of the j-th term. Non-negative j runs the recurrence
/// x' = x + 2y, y' = x + y (d = 2) or x' = 2x + 3y, y' = x + 2y (d = 3) from
/// (1,0), (1,0) and (-1,1). Negative j uses the reflections
///   t_j = (-1)^j t_{-j},  s_j = (-1)^{j-1} s_{-j},
///   xi_j = xi_{-j},       eta_j = -eta_{-j},
///   lambda_j = -lambda_{1-j},  mu_j = mu_{1-j}.
/// For st these give -(1+sqrt2)^j when j < 0; quotients are unaffected.
std::pair<Integer, Integer> unit_seq(UnitKind kind, std::int64_t j);
QuadElem unit_seq_element(UnitKind kind, std::int64_t j);

/// m + k sqrt2 = (1+sqrt2)(n + l sqrt2). The fractions m/n and k/l are swapped
/// by the Cayley transform, and the triple of m/n has |a - b| = |n^2 - 2l^2|.
struct UnitInvPair {
  Integer n, l;  // after normalization to odd n
  ReducedFraction first;   // m/n
  ReducedFraction second;  // k/l
  PythTriple triple;       // from_param(first)
  Integer diff;            // |n^2 - 2l^2|
};

/// Needs gcd(n, l) = 1. Even n (so odd l) is first divided by sqrt2, i.e.
/// (n, l) -> (l, n/2), which exchanges the roles of m/n and k/l. After that,
/// l = 0 or n + l = 0 is rejected. Errors are Error(PreconditionViolated).
UnitInvPair unitinv_pair(const Integer& n, const Integer& l);

struct AbClosePair {
  ReducedFraction t_quotient;  // t_{j+1}/t_j
  ReducedFraction s_quotient;  // s_{j+1}/s_j
  PythTriple triple;           // from_param(t_quotient), |a - b| = 1
};

/// j >= 1, otherwise Error(PreconditionViolated).
AbClosePair abclose_pair(std::int64_t j);

/// One triple with |a - b| = D, obtained from base * (1+sqrt2)^j.
struct DiffFamilyEntry {
  std::int64_t j;
  QuadElem base;
  QuadElem element;  // n + l sqrt2
  ReducedFraction r;        // k/l
  PythTriple triple;        // from_param(r)
  ReducedFraction image_r;  // m/n = cayley(r)
  PythTriple image;         // from_param(image_r) = swap(triple)
  Integer diff;
};

/// One base per orbit of coprime solutions of |x^2 - 2y^2| = D under
/// multiplication by +-(1+sqrt2)^j. The base is the element just before the
/// orbit enters x, y > 0, so its first quotients are the sign-mixed triples
/// (like (-4,3,5) for D = 7). Sorted by the first positive element.
/// Error(InvalidDifference) for D <= 0 or even; Error(NoSolution) for
/// D = 3, 5 mod 8 and when the search finds no coprime solution.
std::vector<QuadElem> diff_ab_bases(const Integer& D);

/// count entries per base, interleaved by position; elements with l = 0 or
/// n + l = 0 (only the unit 1 for D = 1) are skipped, so j may start at 1.
std::vector<DiffFamilyEntry> family_diff_ab(const Integer& D, std::int64_t count);

/// Every triple (and its swap) produced by any orbit element, in both
/// directions, with c <= c_max. Sorted and unique. The b = 0 triples (+-1,0,1)
/// of D = 1 have no swap image and are not included.
std::vector<PythTriple> diff_ab_triples_up_to(const Integer& D, std::int64_t c_max);

/// m + k sqrt3 = (2+sqrt3)(n + l sqrt3).
struct Unit3Pair {
  ReducedFraction r_k;  // k/l
  ReducedFraction r_m;  // m/n
  PythTriple t_k;
  PythTriple t_m;
  Integer c_minus_2a;  // on t_k: N(n + l sqrt3), halved when nl is odd
  Integer h_minus_2f;  // on t_m: -3 times that
};

/// Needs gcd(n, l) = 1, 3 not dividing n, l != 0 and k != 0; otherwise
/// Error(PreconditionViolated).
Unit3Pair unit3_pair(const Integer& n, const Integer& l);

enum class CMinus2aKind { plus1, minus3, minus1, plus3 };

/// 1, -3, -1, 3.
int target(CMinus2aKind kind);
CMinus2aKind cminus2a_kind_for(int value);

struct CMinus2aEntry {
  std::int64_t j;
  ReducedFraction r;
  PythTriple triple;
  Integer value;    // c - 2a of the triple
  bool degenerate;  // b = 0
};

/// j-th quotient (j >= 1) of the family: plus1 uses eta_{j+1}/eta_j (eta_0 = 0
/// has no quotient), minus3 xi_j/xi_{j-1}, minus1 mu_j/mu_{j-1} and plus3
/// lambda_j/lambda_{j-1}.
CMinus2aEntry cminus2a_family(CMinus2aKind kind, std::int64_t j);

/// Smallest x + y sqrt(d), y >= 1, with x^2 - d y^2 = +-1, for squarefree
/// d >= 2. Error(HalfIntegralUnit) if the ring of integers has a smaller unit
/// with half-integral coordinates; Error(SearchExceeded) past max_y.
QuadElem fundamental_unit(std::int64_t d, std::int64_t max_y = 10'000'000);

}  // namespace pythag
