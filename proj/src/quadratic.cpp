#include "pythag/quadratic.hpp"

#include <algorithm>

#include "pythag/error.hpp"

namespace pythag {

QuadElem quad_mul(const QuadElem& u, const QuadElem& v) {
  if (u.d != v.d) {
    throw Error(ErrorKind::MixedDiscriminant,
                "cannot multiply elements of Z[sqrt" + std::to_string(u.d) + "] and Z[sqrt" + std::to_string(v.d) + "]");
  }
  return {u.d, u.x * v.x + u.d * (u.y * v.y), u.x * v.y + v.x * u.y};
}

Integer quad_norm(const QuadElem& u) { return u.x * u.x - u.d * (u.y * u.y); }

QuadElem quad_pow(const QuadElem& u, std::uint64_t k) {
  QuadElem result{u.d, 1, 0};
  QuadElem base = u;
  while (k > 0) {
    if (k & 1) result = quad_mul(result, base);
    k >>= 1;
    if (k > 0) base = quad_mul(base, base);
  }
  return result;
}

bool real_less(const QuadElem& u, const QuadElem& v) {
  if (u.d != v.d) throw Error(ErrorKind::MixedDiscriminant, "cannot compare elements of different rings");
  // sign of p + q sqrt(d) with p = u.x - v.x, q = u.y - v.y
  Integer p = u.x - v.x;
  Integer q = u.y - v.y;
  int sp = sgn(p);
  int sq = sgn(q);
  if (sp >= 0 && sq >= 0) return false;
  if (sp <= 0 && sq <= 0) return true;
  Integer pp = p * p;
  Integer dqq = u.d * (q * q);
  // Mixed signs: the term with the larger square wins.
  return sp > 0 ? pp < dqq : pp > dqq;
}

std::string to_string(const QuadElem& u) {
  std::string out = u.x.get_str();
  out += sgn(u.y) < 0 ? "-" : "+";
  out += Integer(abs(u.y)).get_str();
  out += "sqrt" + std::to_string(u.d);
  return out;
}

std::int64_t discriminant(UnitKind kind) { return kind == UnitKind::st ? 2 : 3; }

std::string to_string(UnitKind kind) {
  switch (kind) {
    case UnitKind::st: return "st";
    case UnitKind::xieta: return "xieta";
    case UnitKind::lambdamu: return "lambdamu";
  }
  return "?";
}

UnitKind parse_unit_kind(std::string_view text) {
  if (text == "st") return UnitKind::st;
  if (text == "xieta") return UnitKind::xieta;
  if (text == "lambdamu") return UnitKind::lambdamu;
  throw Error(ErrorKind::Parse, "unknown sequence '" + std::string(text) + "' (st, xieta or lambdamu)");
}

namespace {

std::pair<Integer, Integer> run_recurrence(UnitKind kind, std::int64_t steps) {
  Integer x = kind == UnitKind::lambdamu ? -1 : 1;
  Integer y = kind == UnitKind::lambdamu ? 1 : 0;
  for (std::int64_t i = 0; i < steps; ++i) {
    Integer nx = kind == UnitKind::st ? Integer(x + 2 * y) : Integer(2 * x + 3 * y);
    Integer ny = kind == UnitKind::st ? Integer(x + y) : Integer(x + 2 * y);
    x = std::move(nx);
    y = std::move(ny);
  }
  return {std::move(x), std::move(y)};
}

}  // namespace

std::pair<Integer, Integer> unit_seq(UnitKind kind, std::int64_t j) {
  if (j >= 0) return run_recurrence(kind, j);
  switch (kind) {
    case UnitKind::st: {
      auto [s, t] = run_recurrence(kind, -j);
      bool j_odd = (j % 2) != 0;
      // t_j = (-1)^j t_{-j}, s_j = (-1)^{j-1} s_{-j}
      return {j_odd ? s : Integer(-s), j_odd ? Integer(-t) : t};
    }
    case UnitKind::xieta: {
      auto [xi, eta] = run_recurrence(kind, -j);
      return {xi, -eta};
    }
    case UnitKind::lambdamu: {
      auto [lambda, mu] = run_recurrence(kind, 1 - j);
      return {-lambda, mu};
    }
  }
  return {};
}

QuadElem unit_seq_element(UnitKind kind, std::int64_t j) {
  auto [x, y] = unit_seq(kind, j);
  return {discriminant(kind), std::move(x), std::move(y)};
}

UnitInvPair unitinv_pair(const Integer& n_in, const Integer& l_in) {
  if (gcd(n_in, l_in) != 1) {
    throw Error(ErrorKind::PreconditionViolated,
                "n = " + n_in.get_str() + " and l = " + l_in.get_str() + " are not coprime");
  }
  Integer n = n_in;
  Integer l = l_in;
  if (is_even(n)) {
    // (n + l sqrt2)/sqrt2 = l + (n/2) sqrt2
    Integer half = n / 2;
    n = l;
    l = half;
  }
  if (sgn(l) == 0 || sgn(Integer(n + l)) == 0) {
    throw Error(ErrorKind::PreconditionViolated,
                "n + l sqrt2 = " + n.get_str() + (sgn(l) < 0 ? "" : "+") + l.get_str() +
                    "sqrt2 gives k/l with a zero term");
  }
  Integer m = n + 2 * l;
  Integer k = n + l;
  ReducedFraction first(m, n);
  ReducedFraction second(k, l);
  PythTriple triple = from_param(first);
  Integer diff = abs(Integer(n * n - 2 * l * l));
  return {std::move(n), std::move(l), std::move(first), std::move(second), std::move(triple), std::move(diff)};
}

AbClosePair abclose_pair(std::int64_t j) {
  if (j < 1) {
    throw Error(ErrorKind::PreconditionViolated, "abclose_pair needs j >= 1");
  }
  auto [s0, t0] = unit_seq(UnitKind::st, j);
  auto [s1, t1] = unit_seq(UnitKind::st, j + 1);
  ReducedFraction t_quotient(t1, t0);
  ReducedFraction s_quotient(s1, s0);
  PythTriple triple = from_param(t_quotient);
  return {std::move(t_quotient), std::move(s_quotient), std::move(triple)};
}

namespace {

const QuadElem kSqrt2Unit{2, 1, 1};      // 1 + sqrt2
const QuadElem kSqrt2UnitInv{2, -1, 1};  // sqrt2 - 1

bool strictly_positive(const QuadElem& u) { return sgn(u.x) > 0 && sgn(u.y) > 0; }

bool usable(const QuadElem& u) { return sgn(u.y) != 0 && sgn(Integer(u.x + u.y)) != 0; }

// First element of the orbit (under powers of 1+sqrt2) with x, y > 0,
// starting from a solution with x, y >= 0.
QuadElem first_positive(QuadElem u) {
  while (!strictly_positive(u)) u = quad_mul(u, kSqrt2Unit);
  for (;;) {
    QuadElem prev = quad_mul(u, kSqrt2UnitInv);
    if (!strictly_positive(prev)) return u;
    u = std::move(prev);
  }
}

void check_difference(const Integer& D) {
  if (sgn(D) <= 0 || is_even(D)) {
    throw Error(ErrorKind::InvalidDifference,
                "|a-b| = " + D.get_str() + " is impossible: the legs of a primitive triple differ by an odd amount");
  }
  unsigned long residue = mpz_fdiv_ui(D.get_mpz_t(), 8);
  if (residue == 3 || residue == 5) {
    throw Error(ErrorKind::NoSolution,
                "no primitive triple has |a-b| = " + D.get_str() + " (mod 8 residue " + std::to_string(residue) +
                    "): n^2 - 2l^2 mod 8 only takes the values 0, 1, 2, 4, 6, 7");
  }
}

}  // namespace

std::vector<QuadElem> diff_ab_bases(const Integer& D) {
  check_difference(D);
  std::vector<QuadElem> firsts;
  // x^2 = 2y^2 +- D; any such x is at most D + 2y.
  for (Integer y = 0; y <= D; ++y) {
    for (int s : {1, -1}) {
      Integer xx = 2 * y * y + s * D;
      if (!is_perfect_square(xx)) continue;
      Integer x = isqrt(xx);
      if (gcd(x, y) != 1) continue;
      QuadElem p = first_positive({2, x, y});
      if (std::find(firsts.begin(), firsts.end(), p) == firsts.end()) firsts.push_back(std::move(p));
    }
  }
  if (firsts.empty()) {
    throw Error(ErrorKind::NoSolution, "x^2 - 2y^2 = +-" + D.get_str() + " has no coprime solution");
  }
  std::sort(firsts.begin(), firsts.end(), real_less);
  std::vector<QuadElem> bases;
  for (const auto& p : firsts) bases.push_back(quad_mul(p, kSqrt2UnitInv));
  return bases;
}

namespace {

DiffFamilyEntry make_entry(std::int64_t j, const QuadElem& base, const QuadElem& element) {
  UnitInvPair pair = unitinv_pair(element.x, element.y);
  PythTriple triple = from_param(pair.second);
  Integer diff = abs(Integer(triple.a() - triple.b()));
  return {j, base, element, pair.second, std::move(triple), pair.first, pair.triple, std::move(diff)};
}

}  // namespace

std::vector<DiffFamilyEntry> family_diff_ab(const Integer& D, std::int64_t count) {
  if (count < 0) throw Error(ErrorKind::PreconditionViolated, "count must be nonnegative");
  std::vector<QuadElem> bases = diff_ab_bases(D);
  std::vector<std::vector<DiffFamilyEntry>> per_base;
  for (const auto& base : bases) {
    std::vector<DiffFamilyEntry> entries;
    QuadElem element = base;
    for (std::int64_t j = 0; static_cast<std::int64_t>(entries.size()) < count; ++j) {
      if (usable(element)) entries.push_back(make_entry(j, base, element));
      element = quad_mul(element, kSqrt2Unit);
    }
    per_base.push_back(std::move(entries));
  }
  std::vector<DiffFamilyEntry> out;
  for (std::int64_t i = 0; i < count; ++i) {
    for (auto& entries : per_base) out.push_back(std::move(entries[i]));
  }
  return out;
}

std::vector<PythTriple> diff_ab_triples_up_to(const Integer& D, std::int64_t c_max) {
  std::vector<PythTriple> out;
  // c >= max(n^2, l^2)/2 for the triple of n + l sqrt2, and |n|, |l| grow
  // monotonically away from the base in both directions.
  const Integer limit = 2 * Integer(static_cast<long>(c_max));
  auto too_large = [&](const QuadElem& u) {
    Integer big = std::max(abs(u.x), abs(u.y));
    return big * big > limit;
  };
  auto collect = [&](const QuadElem& u) {
    if (!usable(u)) return;
    DiffFamilyEntry e = make_entry(0, u, u);
    for (const PythTriple* t : {&e.triple, &e.image}) {
      if (t->c() <= c_max) out.push_back(*t);
    }
  };
  for (const auto& base : diff_ab_bases(D)) {
    for (QuadElem u = quad_mul(base, kSqrt2Unit); !too_large(u); u = quad_mul(u, kSqrt2Unit)) collect(u);
    int misses = 0;
    for (QuadElem u = base; misses < 2; u = quad_mul(u, kSqrt2UnitInv)) {
      if (too_large(u)) {
        ++misses;
        continue;
      }
      misses = 0;
      collect(u);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Unit3Pair unit3_pair(const Integer& n, const Integer& l) {
  if (gcd(n, l) != 1) {
    throw Error(ErrorKind::PreconditionViolated, "n = " + n.get_str() + " and l = " + l.get_str() + " are not coprime");
  }
  if (mpz_divisible_ui_p(n.get_mpz_t(), 3)) {
    throw Error(ErrorKind::PreconditionViolated, "n = " + n.get_str() + " is divisible by 3");
  }
  Integer m = 2 * n + 3 * l;
  Integer k = n + 2 * l;
  if (sgn(l) == 0 || sgn(k) == 0) {
    throw Error(ErrorKind::PreconditionViolated, "k/l = " + k.get_str() + "/" + l.get_str() + " is not a nonzero rational");
  }
  ReducedFraction r_k(k, l);
  ReducedFraction r_m(m, n);
  Integer norm = quad_norm({3, n, l});
  if (is_odd(Integer(n * l))) norm /= 2;
  PythTriple t_k = from_param(r_k);
  PythTriple t_m = from_param(r_m);
  return {std::move(r_k), std::move(r_m), std::move(t_k), std::move(t_m), norm, -3 * norm};
}

int target(CMinus2aKind kind) {
  switch (kind) {
    case CMinus2aKind::plus1: return 1;
    case CMinus2aKind::minus3: return -3;
    case CMinus2aKind::minus1: return -1;
    case CMinus2aKind::plus3: return 3;
  }
  return 0;
}

CMinus2aKind cminus2a_kind_for(int value) {
  switch (value) {
    case 1: return CMinus2aKind::plus1;
    case -3: return CMinus2aKind::minus3;
    case -1: return CMinus2aKind::minus1;
    case 3: return CMinus2aKind::plus3;
    default:
      throw Error(ErrorKind::PreconditionViolated,
                  "c - 2a families exist for 1, -1, 3 and -3, not " + std::to_string(value));
  }
}

CMinus2aEntry cminus2a_family(CMinus2aKind kind, std::int64_t j) {
  if (j < 1) throw Error(ErrorKind::PreconditionViolated, "family index j must be >= 1");
  auto quotient = [](UnitKind seq, std::int64_t top, bool second) {
    auto upper = unit_seq(seq, top);
    auto lower = unit_seq(seq, top - 1);
    return second ? ReducedFraction(upper.second, lower.second) : ReducedFraction(upper.first, lower.first);
  };
  ReducedFraction r = [&] {
    switch (kind) {
      case CMinus2aKind::plus1: return quotient(UnitKind::xieta, j + 1, true);
      case CMinus2aKind::minus3: return quotient(UnitKind::xieta, j, false);
      case CMinus2aKind::minus1: return quotient(UnitKind::lambdamu, j, true);
      case CMinus2aKind::plus3: break;
    }
    return quotient(UnitKind::lambdamu, j, false);
  }();
  PythTriple triple = from_param(r);
  Integer value = triple.c() - 2 * triple.a();
  bool degenerate = sgn(triple.b()) == 0;
  return {j, std::move(r), std::move(triple), std::move(value), degenerate};
}

QuadElem fundamental_unit(std::int64_t d, std::int64_t max_y) {
  if (d < 2 || !is_squarefree(Integer(static_cast<long>(d)))) {
    throw Error(ErrorKind::PreconditionViolated, "d = " + std::to_string(d) + " must be squarefree and >= 2");
  }
  const Integer dd(static_cast<long>(d));
  // For d = 1 mod 4 the ring of integers also contains (x + y sqrt d)/2 with
  // x^2 - d y^2 = +-4; otherwise units are x + y sqrt d with x^2 - d y^2 = +-1.
  const bool wide = d % 4 == 1;
  const int rhs = wide ? 4 : 1;
  for (std::int64_t y = 1; y <= max_y; ++y) {
    Integer yy = Integer(static_cast<long>(y));
    yy *= yy;
    for (int s : {-1, 1}) {
      Integer xx = dd * yy + s * rhs;
      if (!is_perfect_square(xx)) continue;
      Integer x = isqrt(xx);
      if (!wide) return {d, std::move(x), Integer(static_cast<long>(y))};
      if (is_odd(x)) {
        throw Error(ErrorKind::HalfIntegralUnit,
                    "the fundamental unit of Q(sqrt" + std::to_string(d) + ") is (" + x.get_str() + "+" +
                        std::to_string(y) + "sqrt" + std::to_string(d) + ")/2");
      }
      return {d, x / 2, Integer(static_cast<long>(y / 2))};
    }
  }
  throw Error(ErrorKind::SearchExceeded, "no unit with y <= " + std::to_string(max_y) + " for d = " + std::to_string(d));
}

}  // namespace pythag
