#include "pythag/involution.hpp"

#include <cctype>
#include <functional>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "pythag/error.hpp"

namespace pythag {

PythTriple swap(const PythTriple& t) { return PythTriple(t.b(), t.a(), t.c()); }

RationalTriple swap(const RationalTriple& t) {
  if (sgn(t.b()) == 0) {
    throw Error(ErrorKind::DegenerateInvolution, "the involution is undefined on " + to_string(t) + " (b = 0)");
  }
  return RationalTriple(t.b(), t.a(), t.c());
}

ReducedFraction cayley(const ReducedFraction& r) {
  if (abs(r.num()) == r.den()) {
    throw Error(ErrorKind::DegenerateParameter,
                "the Cayley transform sends r = " + to_display_string(r) + " outside Q^x (b = 0 class)");
  }
  return ReducedFraction(r.num() + r.den(), r.num() - r.den());
}

EtaleUnit cayley_etale(const EtaleUnit& u) {
  if (sgn(u.beta) == 0) {
    throw Error(ErrorKind::DegenerateParameter, "the involution needs beta != 0");
  }
  Rational alpha = u.alpha / u.beta;
  Rational beta = 1 / u.beta;
  return EtaleUnit(std::move(alpha), std::move(beta));
}

GenWord GenWord::g() {
  static const GenWord word(std::make_shared<const Node>(Generator{'G'}));
  return word;
}

GenWord GenWord::s() {
  static const GenWord word(std::make_shared<const Node>(Generator{'S'}));
  return word;
}

GenWord GenWord::mul(GenWord left, GenWord right) {
  return GenWord(std::make_shared<const Node>(Mul{std::move(left), std::move(right)}));
}

GenWord GenWord::pow(GenWord base, Integer exponent) {
  return GenWord(std::make_shared<const Node>(Pow{std::move(base), std::move(exponent)}));
}

GenWord GenWord::inv(GenWord inner) { return GenWord(std::make_shared<const Node>(Inv{std::move(inner)})); }

bool operator==(const GenWord& x, const GenWord& y) {
  if (x.id() == y.id()) return true;
  const auto& nx = x.node();
  const auto& ny = y.node();
  if (nx.index() != ny.index()) return false;
  if (const auto* gx = std::get_if<GenWord::Generator>(&nx)) {
    return gx->symbol == std::get<GenWord::Generator>(ny).symbol;
  }
  if (const auto* mx = std::get_if<GenWord::Mul>(&nx)) {
    const auto& my = std::get<GenWord::Mul>(ny);
    return mx->left == my.left && mx->right == my.right;
  }
  if (const auto* px = std::get_if<GenWord::Pow>(&nx)) {
    const auto& py = std::get<GenWord::Pow>(ny);
    return px->exponent == py.exponent && px->base == py.base;
  }
  return std::get<GenWord::Inv>(nx).inner == std::get<GenWord::Inv>(ny).inner;
}

namespace {

/// Bottom-up fold over the DAG, visiting each node once.
template <class T>
class DagFold {
 public:
  using Step = std::function<T(const GenWord&, const std::function<T(const GenWord&)>&)>;
  explicit DagFold(Step step) : step_(std::move(step)) {}

  T operator()(const GenWord& w) {
    if (auto it = memo_.find(w.id()); it != memo_.end()) return it->second;
    T value = step_(w, [this](const GenWord& child) { return (*this)(child); });
    memo_.emplace(w.id(), value);
    return value;
  }

 private:
  Step step_;
  std::unordered_map<const void*, T> memo_;
};

}  // namespace

std::string to_string(const GenWord& w) {
  DagFold<std::string> fold([](const GenWord& word, const auto& recurse) -> std::string {
    const auto& node = word.node();
    if (const auto* g = std::get_if<GenWord::Generator>(&node)) return std::string(1, g->symbol);
    if (const auto* m = std::get_if<GenWord::Mul>(&node)) {
      return "mul(" + recurse(m->left) + "," + recurse(m->right) + ")";
    }
    if (const auto* p = std::get_if<GenWord::Pow>(&node)) {
      return "pow(" + recurse(p->base) + "," + p->exponent.get_str() + ")";
    }
    return "inv(" + recurse(std::get<GenWord::Inv>(node).inner) + ")";
  });
  return fold(w);
}

int inv_depth(const GenWord& w) {
  DagFold<int> fold([](const GenWord& word, const auto& recurse) -> int {
    const auto& node = word.node();
    if (std::holds_alternative<GenWord::Generator>(node)) return 0;
    if (const auto* m = std::get_if<GenWord::Mul>(&node)) return std::max(recurse(m->left), recurse(m->right));
    if (const auto* p = std::get_if<GenWord::Pow>(&node)) return recurse(p->base);
    return 1 + recurse(std::get<GenWord::Inv>(node).inner);
  });
  return fold(w);
}

std::size_t node_count(const GenWord& w) {
  std::unordered_map<const void*, bool> seen;
  std::vector<GenWord> stack{w};
  while (!stack.empty()) {
    GenWord cur = stack.back();
    stack.pop_back();
    if (!seen.emplace(cur.id(), true).second) continue;
    const auto& node = cur.node();
    if (const auto* m = std::get_if<GenWord::Mul>(&node)) {
      stack.push_back(m->left);
      stack.push_back(m->right);
    } else if (const auto* p = std::get_if<GenWord::Pow>(&node)) {
      stack.push_back(p->base);
    } else if (const auto* i = std::get_if<GenWord::Inv>(&node)) {
      stack.push_back(i->inner);
    }
  }
  return seen.size();
}

namespace {

class WordParser {
 public:
  explicit WordParser(std::string_view text) : original_(text) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) text_.push_back(ch);
    }
  }

  GenWord parse() {
    GenWord w = word();
    if (pos_ != text_.size()) fail("trailing input");
    return w;
  }

 private:
  GenWord word() {
    if (accept("G")) return GenWord::g();
    if (accept("S")) return GenWord::s();
    if (accept("inv(")) {
      GenWord inner = word();
      expect(')');
      return GenWord::inv(std::move(inner));
    }
    if (accept("mul(")) {
      GenWord left = word();
      expect(',');
      GenWord right = word();
      expect(')');
      return GenWord::mul(std::move(left), std::move(right));
    }
    if (accept("pow(")) {
      GenWord base = word();
      expect(',');
      std::size_t start = pos_;
      if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Integer exponent = parse_integer(std::string_view(text_).substr(start, pos_ - start));
      expect(')');
      return GenWord::pow(std::move(base), std::move(exponent));
    }
    fail("expected G, S, inv(, mul( or pow(");
  }

  bool accept(std::string_view token) {
    if (std::string_view(text_).substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(char ch) {
    if (pos_ >= text_.size() || text_[pos_] != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::Parse,
                what + " at offset " + std::to_string(pos_) + " in word '" + std::string(original_) + "'");
  }

  std::string_view original_;
  std::string text_;
  std::size_t pos_ = 0;
};

std::recursive_mutex prime_word_mutex;
std::map<Integer, GenWord>& prime_words() {
  static std::map<Integer, GenWord> words;
  return words;
}

GenWord word_for_prime(const Integer& p) {
  std::lock_guard<std::recursive_mutex> lock(prime_word_mutex);
  auto& cache = prime_words();
  if (auto it = cache.find(p); it != cache.end()) return it->second;
  GenWord w = p == 2 ? GenWord::g() : GenWord::inv(decompose(ReducedFraction(p + 1, p - 1)));
  cache.emplace(p, w);
  return w;
}

}  // namespace

GenWord parse_word(std::string_view text) { return WordParser(text).parse(); }

GenWord decompose(const ReducedFraction& r) {
  std::vector<GenWord> factors;
  if (sgn(r.num()) < 0) factors.push_back(GenWord::s());
  auto append = [&](const Integer& part, int direction) {
    if (part == 1) return;
    for (const auto& [p, e] : factorize(part)) {
      GenWord w = word_for_prime(p);
      if (e == 1 && direction > 0) {
        factors.push_back(std::move(w));
      } else {
        factors.push_back(GenWord::pow(std::move(w), Integer(e) * direction));
      }
    }
  };
  append(abs(r.num()), 1);
  append(r.den(), -1);
  if (factors.empty()) return GenWord::pow(GenWord::g(), 0);
  GenWord word = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) word = GenWord::mul(std::move(word), factors[i]);
  return word;
}

RationalTriple Evaluator::operator()(const GenWord& w) {
  if (auto it = memo_.find(w.id()); it != memo_.end()) return it->second.second;
  const auto& node = w.node();
  RationalTriple value = [&]() -> RationalTriple {
    if (const auto* g = std::get_if<GenWord::Generator>(&node)) {
      return g->symbol == 'G' ? RationalTriple(4, 3, 5) : RationalTriple(-1, 0, 1);
    }
    if (const auto* m = std::get_if<GenWord::Mul>(&node)) {
      RationalTriple left = (*this)(m->left);
      return bs_product(left, (*this)(m->right));
    }
    if (const auto* p = std::get_if<GenWord::Pow>(&node)) return power((*this)(p->base), p->exponent);
    return swap((*this)(std::get<GenWord::Inv>(node).inner));
  }();
  memo_.emplace(w.id(), std::make_pair(w, value));
  return value;
}

RationalTriple evaluate(const GenWord& w) { return Evaluator{}(w); }

}  // namespace pythag
