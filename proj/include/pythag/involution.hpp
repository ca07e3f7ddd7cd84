#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "pythag/group.hpp"
#include "pythag/triples.hpp"

namespace pythag {

/// (a, b, c) -> (b, a, c).
PythTriple swap(const PythTriple& t);
/// Same on rational triples; throws Error(DegenerateInvolution) when b = 0
/// because the image would have a = 0.
RationalTriple swap(const RationalTriple& t);

/// r -> (r + 1)/(r - 1): the swap seen on parameters. Throws
/// Error(DegenerateParameter) for r = 1 and r = -1.
ReducedFraction cayley(const ReducedFraction& r);
/// alpha + beta*eps -> (alpha + eps)/beta. Throws Error(DegenerateParameter)
/// for beta = 0.
EtaleUnit cayley_etale(const EtaleUnit& u);

/// Words over G = (4,3,5) and S = (-1,0,1) built from the product (mul),
/// integer powers (pow) and the swap involution (inv). Nodes are immutable and
/// may be shared, so a word is a DAG.
class GenWord {
 public:
  struct Generator {
    char symbol;  // 'G' or 'S'
  };
  struct Mul;
  struct Pow;
  struct Inv;
  using Node = std::variant<Generator, Mul, Pow, Inv>;

  static GenWord g();
  static GenWord s();
  static GenWord mul(GenWord left, GenWord right);
  static GenWord pow(GenWord base, Integer exponent);
  static GenWord inv(GenWord inner);

  const Node& node() const;
  const void* id() const { return node_.get(); }

  friend bool operator==(const GenWord& x, const GenWord& y);

 private:
  explicit GenWord(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct GenWord::Mul {
  GenWord left, right;
};
struct GenWord::Pow {
  GenWord base;
  Integer exponent;
};
struct GenWord::Inv {
  GenWord inner;
};

inline const GenWord::Node& GenWord::node() const { return *node_; }

/// Grammar: G | S | inv(w) | mul(w,w) | pow(w,k).
std::string to_string(const GenWord& w);
/// Whitespace is ignored. Throws Error(Parse) on malformed input.
GenWord parse_word(std::string_view text);

/// Nesting depth of inv nodes, i.e. how many times decompose recursed.
int inv_depth(const GenWord& w);
/// Number of distinct nodes in the DAG.
std::size_t node_count(const GenWord& w);

/// A word whose value lies in the scalar class of from_param(r): the sign
/// becomes S, the prime 2 becomes G, and an odd prime p becomes
/// inv(decompose((p+1)/(p-1))); every prime in (p+1)/(p-1) is smaller than p.
/// Words for primes are cached process-wide and shared between results.
GenWord decompose(const ReducedFraction& r);

/// Evaluates words, remembering the value of every node it has seen so that
/// shared subwords are evaluated once. Not thread-safe; use one per thread.
class Evaluator {
 public:
  /// Throws Error(DegenerateInvolution) if an inv node meets a b = 0 value.
  RationalTriple operator()(const GenWord& w);

 private:
  std::map<const void*, std::pair<GenWord, RationalTriple>> memo_;
};

RationalTriple evaluate(const GenWord& w);

}  // namespace pythag
