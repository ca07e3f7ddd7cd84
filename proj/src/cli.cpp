#include "pythag/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "pythag/error.hpp"
#include "pythag/group.hpp"
#include "pythag/involution.hpp"
#include "pythag/quadratic.hpp"
#include "pythag/serialize.hpp"
#include "pythag/triples.hpp"
#include "pythag/verify.hpp"

namespace pythag::cli {

namespace {

enum class Format { table, json };

// Accepts "a,b,c", "(a,b,c)" or three separate tokens.
std::string join_triple(const std::vector<std::string>& parts) {
  if (parts.size() == 1) return parts[0];
  if (parts.size() == 3) return parts[0] + "," + parts[1] + "," + parts[2];
  throw Error(ErrorKind::Parse, "expected a triple as 'a,b,c' or as three numbers");
}

PythTriple parse_integer_triple(const std::vector<std::string>& parts) {
  std::string text = join_triple(parts);
  text.erase(std::remove_if(text.begin(), text.end(), [](unsigned char ch) { return std::isspace(ch) != 0; }),
             text.end());
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
  std::vector<Integer> entries;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) entries.push_back(parse_integer(item));
  if (entries.size() != 3 || text.empty() || text.back() == ',') {
    throw Error(ErrorKind::Parse, "expected an integer triple 'a,b,c', got '" + text + "'");
  }
  return PythTriple(entries[0], entries[1], entries[2]);
}

RationalTriple parse_triple_arg(const std::vector<std::string>& parts) {
  return parse_rational_triple(join_triple(parts));
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

// Collects the command's result in both shapes; only one is printed.
struct Result {
  std::vector<std::string> lines;
  json value;
  int exit_code = 0;
};

Result scalar_result(const std::string& text, json value) { return {{text}, std::move(value), 0}; }

Result triple_result(const RationalTriple& t) { return scalar_result(to_string(t), to_json(t)); }
Result triple_result(const PythTriple& t) { return scalar_result(to_string(t), to_json(t)); }

Result family_diff_ab_result(const Integer& D, std::int64_t count) {
  Result result;
  result.value = json::array();
  result.lines.push_back(pad("j", 5) + pad("r", 14) + pad("triple", 34) + pad("swap r", 14) + "swap triple");
  for (const auto& e : family_diff_ab(D, count)) {
    result.lines.push_back(pad(std::to_string(e.j), 5) + pad(to_display_string(e.r), 14) +
                           pad(to_string(e.triple), 34) + pad(to_display_string(e.image_r), 14) +
                           to_string(e.image));
    result.value.push_back(to_json(e));
  }
  return result;
}

Result family_cminus2a_result(int target_value, std::int64_t count) {
  CMinus2aKind kind = cminus2a_kind_for(target_value);
  Result result;
  result.value = json::array();
  result.lines.push_back(pad("j", 5) + pad("r", 14) + pad("triple", 34) + "c-2a");
  for (std::int64_t j = 1; j <= count; ++j) {
    CMinus2aEntry e = cminus2a_family(kind, j);
    result.lines.push_back(pad(std::to_string(j), 5) + pad(to_display_string(e.r), 14) +
                           pad(to_string(e.triple), 34) + e.value.get_str() + (e.degenerate ? "  (b = 0)" : ""));
    result.value.push_back(to_json(e));
  }
  return result;
}

Result verify_result(const verify::Options& options) {
  Result result;
  result.value = json::array();
  for (const auto& suite : verify::run_all(options)) {
    std::string line = std::string(suite.passed() ? "PASS" : "FAIL") + "  " + pad(suite.name, 60) +
                       "checks=" + std::to_string(suite.checks) + " failures=" + std::to_string(suite.failures);
    if (!suite.passed()) line += "  first: " + suite.first_failure;
    result.lines.push_back(line);
    json entry = {{"suite", suite.name},
                  {"passed", suite.passed()},
                  {"checks", suite.checks},
                  {"failures", suite.failures}};
    if (!suite.passed()) entry["first_failure"] = suite.first_failure;
    result.value.push_back(std::move(entry));
    if (!suite.passed()) result.exit_code = 1;
  }
  return result;
}

Format default_format() {
  const char* env = std::getenv("PYTHAG_FORMAT");
  if (env != nullptr && std::string(env) == "json") return Format::json;
  return Format::table;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pythagorean triples as a group: parametrization, products, the swap involution and Pell families",
               "pythag"};
  app.require_subcommand(1);
  // Lets --format and --json follow the subcommand's own arguments.
  app.fallthrough();

  Format format = default_format();
  std::map<std::string, Format> format_names{{"table", Format::table}, {"json", Format::json}};
  app.add_option("--format", format, "Output format (default from PYTHAG_FORMAT, else table)")
      ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));
  bool json_flag = false;
  app.add_flag("--json", json_flag, "Same as --format json");

  std::function<Result()> action;

  // Positional arguments are kept as strings and parsed by the library, so
  // that parse errors carry the library's messages.
  std::string r_text;
  std::vector<std::string> triple_parts;
  std::string t1_text, t2_text;
  std::string word_text;
  std::string exponent_text;

  auto* param = app.add_subcommand("param", "Primitive triple of a nonzero rational m/n");
  param->add_option("r", r_text, "m/n or an integer")->required();
  param->callback([&] { action = [&] { return triple_result(from_param(parse_fraction(r_text))); }; });

  auto* unparam = app.add_subcommand("unparam", "Parameter (c+b)/a of a triple");
  unparam->add_option("triple", triple_parts, "a,b,c or a b c")->required()->expected(1, 3);
  unparam->callback([&] {
    action = [&] {
      ReducedFraction r = to_param(parse_integer_triple(triple_parts));
      return scalar_result(to_display_string(r), to_json(r));
    };
  });

  auto* mul = app.add_subcommand("mul", "Product of two rational triples");
  mul->add_option("t1", t1_text, "a,b,c")->required();
  mul->add_option("t2", t2_text, "a,b,c")->required();
  mul->callback([&] {
    action = [&] { return triple_result(bs_product(parse_rational_triple(t1_text), parse_rational_triple(t2_text))); };
  });

  auto* inv = app.add_subcommand("inv", "Group inverse of a rational triple");
  inv->add_option("triple", triple_parts, "a,b,c or a b c")->required()->expected(1, 3);
  inv->callback([&] { action = [&] { return triple_result(inverse(parse_triple_arg(triple_parts))); }; });

  auto* pow_cmd = app.add_subcommand("pow", "Integer power of a rational triple");
  pow_cmd->add_option("triple", t1_text, "a,b,c")->required();
  pow_cmd->add_option("k", exponent_text, "integer exponent")->required();
  pow_cmd->callback([&] {
    action = [&] { return triple_result(power(parse_rational_triple(t1_text), parse_integer(exponent_text))); };
  });

  auto* swap_cmd = app.add_subcommand("swap", "Exchange the legs: (a,b,c) -> (b,a,c)");
  swap_cmd->add_option("triple", triple_parts, "a,b,c or a b c")->required()->expected(1, 3);
  swap_cmd->callback([&] { action = [&] { return triple_result(swap(parse_triple_arg(triple_parts))); }; });

  auto* cayley_cmd = app.add_subcommand("cayley", "The swap on parameters: r -> (r+1)/(r-1)");
  cayley_cmd->add_option("r", r_text, "m/n or an integer")->required();
  cayley_cmd->callback([&] {
    action = [&] {
      ReducedFraction image = cayley(parse_fraction(r_text));
      return scalar_result(to_display_string(image), to_json(image));
    };
  });

  auto* decompose_cmd = app.add_subcommand("decompose", "Word in G = (4,3,5), S = (-1,0,1) and inv for r");
  decompose_cmd->add_option("r", r_text, "m/n or an integer")->required();
  decompose_cmd->callback([&] {
    action = [&] {
      ReducedFraction r = parse_fraction(r_text);
      GenWord w = decompose(r);
      std::string word = to_string(w);
      json value = {{"r", to_json(r)}, {"word", word}, {"inv_depth", inv_depth(w)}, {"nodes", node_count(w)}};
      return scalar_result(word, std::move(value));
    };
  });

  auto* eval = app.add_subcommand("eval", "Value of a word in G, S, inv, mul and pow");
  eval->add_option("word", word_text, "e.g. inv(mul(inv(G),pow(G,-1)))")->required();
  eval->callback([&] {
    action = [&] {
      RationalTriple value = evaluate(parse_word(word_text));
      PythTriple primitive = normalize_primitive(value);
      Result result;
      result.lines = {"value " + to_string(value), "class " + to_string(primitive)};
      result.value = {{"word", word_text}, {"value", to_json(value)}, {"class", to_json(primitive)}};
      return result;
    };
  });

  auto* normal = app.add_subcommand("normal", "Normal form scalar * K * from_param(r) of a rational triple");
  normal->add_option("triple", triple_parts, "a,b,c or a b c")->required()->expected(1, 3);
  normal->callback([&] {
    action = [&] {
      NormalForm f = normal_form(parse_triple_arg(triple_parts));
      std::string text = "scalar " + to_string(f.scalar) + "  r " + to_display_string(f.param) + "  klein " +
                         to_string(f.klein);
      return scalar_result(text, to_json(f));
    };
  });

  auto* gens = app.add_subcommand("gens", "Factorization of r into generator powers");
  gens->add_option("r", r_text, "m/n or an integer")->required();
  gens->callback([&] {
    action = [&] {
      Result result;
      result.value = json::array();
      for (const auto& f : generator_factorization(parse_fraction(r_text))) {
        std::string prime = f.prime == -1 ? "sign" : f.prime.get_str();
        result.lines.push_back(pad(prime, 8) + pad(to_string(f.generator), 40) + "^" + f.exponent.get_str());
        result.value.push_back({{"prime", prime}, {"generator", to_json(f.generator)}, {"exponent", f.exponent.get_str()}});
      }
      return result;
    };
  });

  auto* klein = app.add_subcommand("klein", "Sign component (sign a, sign c) of a rational triple");
  klein->add_option("triple", triple_parts, "a,b,c or a b c")->required()->expected(1, 3);
  klein->callback([&] {
    action = [&] {
      std::string k = to_string(klein_component(parse_triple_arg(triple_parts)));
      return scalar_result(k, k);
    };
  });

  auto* normalize = app.add_subcommand("normalize", "Primitive integral triple with c > 0 in the same class");
  normalize->add_option("triple", triple_parts, "a,b,c or a b c")->required()->expected(1, 3);
  bool positive_a = false;
  normalize->add_flag("--positive-a", positive_a, "Make a > 0 instead of c > 0");
  normalize->callback([&] {
    action = [&] {
      auto convention = positive_a ? SignConvention::positive_a : SignConvention::positive_c;
      return triple_result(normalize_primitive(parse_triple_arg(triple_parts), convention));
    };
  });

  auto* etale = app.add_subcommand("etale", "Coordinates alpha = c/a, beta = b/a");
  etale->add_option("triple", triple_parts, "a,b,c or a b c")->required()->expected(1, 3);
  etale->callback([&] {
    action = [&] {
      EtaleUnit u = to_etale(parse_integer_triple(triple_parts));
      return scalar_result("alpha " + to_string(u.alpha) + "  beta " + to_string(u.beta),
                           {{"alpha", to_string(u.alpha)}, {"beta", to_string(u.beta)}});
    };
  });

  for (const char* name : {"height", "excess", "increment"}) {
    std::string what = std::string(name) == "height"   ? "c - b"
                       : std::string(name) == "excess" ? "a + b - c"
                                                       : "m - n for r = m/n > 1 (primitive, positive entries)";
    auto* sub = app.add_subcommand(name, what);
    sub->add_option("triple", triple_parts, "a,b,c or a b c")->required()->expected(1, 3);
    sub->callback([&, name = std::string(name)] {
      action = [&, name] {
        PythTriple t = parse_integer_triple(triple_parts);
        Integer value = name == "height" ? height(t) : name == "excess" ? excess(t) : increment(t);
        return scalar_result(value.get_str(), value.get_str());
      };
    });
  }

  std::optional<std::string> diff_text;
  std::optional<int> cminus2a_value;
  std::int64_t count = 5;
  auto* family = app.add_subcommand("family", "Families of triples with prescribed |a-b| or c-2a");
  auto* diff_opt = family->add_option("--diff-ab", diff_text, "odd D > 0: triples with |a-b| = D");
  auto* c2a_opt =
      family->add_option("--c-minus-2a", cminus2a_value, "one of 1, -1, 3, -3")->check(CLI::IsMember({1, -1, 3, -3}));
  diff_opt->excludes(c2a_opt);
  family->add_option("--count", count, "entries per base (default 5)")->check(CLI::NonNegativeNumber);
  family->callback([&] {
    if (!diff_text && !cminus2a_value) throw CLI::RequiredError("--diff-ab or --c-minus-2a");
    action = [&] {
      if (diff_text) return family_diff_ab_result(parse_integer(*diff_text), count);
      return family_cminus2a_result(*cminus2a_value, count);
    };
  });

  std::string seq_kind;
  std::int64_t seq_from = 0, seq_to = 10;
  auto* seq = app.add_subcommand("seq", "Unit sequences: st (1+sqrt2)^j, xieta (2+sqrt3)^j, lambdamu (sqrt3-1)(2+sqrt3)^j");
  seq->add_option("kind", seq_kind, "st, xieta or lambdamu")->required();
  seq->add_option("--from", seq_from, "first j (default 0)");
  seq->add_option("--to", seq_to, "last j (default 10)");
  seq->callback([&] {
    action = [&] {
      UnitKind kind = parse_unit_kind(seq_kind);
      Result result;
      result.value = json::array();
      for (std::int64_t j = seq_from; j <= seq_to; ++j) {
        auto [x, y] = unit_seq(kind, j);
        result.lines.push_back(pad(std::to_string(j), 6) + pad(x.get_str(), 40) + y.get_str());
        result.value.push_back({{"j", j}, {"x", x.get_str()}, {"y", y.get_str()}});
      }
      return result;
    };
  });

  std::string unit_n, unit_l;
  auto* unitinv = app.add_subcommand("unitinv", "m + k sqrt2 = (1+sqrt2)(n + l sqrt2) and the swapped pair m/n, k/l");
  unitinv->add_option("n", unit_n)->required();
  unitinv->add_option("l", unit_l)->required();
  unitinv->callback([&] {
    action = [&] {
      UnitInvPair p = unitinv_pair(parse_integer(unit_n), parse_integer(unit_l));
      Result result;
      result.lines = {"m/n " + to_display_string(p.first) + "  " + to_string(p.triple),
                      "k/l " + to_display_string(p.second) + "  " + to_string(from_param(p.second)),
                      "|a-b| " + p.diff.get_str()};
      result.value = {{"n", p.n.get_str()},          {"l", p.l.get_str()},
                      {"first", to_json(p.first)},   {"second", to_json(p.second)},
                      {"triple", to_json(p.triple)}, {"diff", p.diff.get_str()}};
      return result;
    };
  });

  auto* unit3 = app.add_subcommand("unit3", "m + k sqrt3 = (2+sqrt3)(n + l sqrt3) and the c-2a values");
  unit3->add_option("n", unit_n)->required();
  unit3->add_option("l", unit_l)->required();
  unit3->callback([&] {
    action = [&] {
      Unit3Pair p = unit3_pair(parse_integer(unit_n), parse_integer(unit_l));
      Result result;
      result.lines = {"k/l " + to_display_string(p.r_k) + "  " + to_string(p.t_k) + "  c-2a " + p.c_minus_2a.get_str(),
                      "m/n " + to_display_string(p.r_m) + "  " + to_string(p.t_m) + "  c-2a " + p.h_minus_2f.get_str()};
      result.value = {{"r_k", to_json(p.r_k)}, {"t_k", to_json(p.t_k)}, {"c_minus_2a", p.c_minus_2a.get_str()},
                      {"r_m", to_json(p.r_m)}, {"t_m", to_json(p.t_m)}, {"h_minus_2f", p.h_minus_2f.get_str()}};
      return result;
    };
  });

  std::int64_t unit_d = 2;
  auto* unit = app.add_subcommand("unit", "Fundamental unit x + y sqrt(d) of Z[sqrt(d)]");
  unit->add_option("d", unit_d, "squarefree d >= 2")->required();
  unit->callback([&] {
    action = [&] {
      QuadElem u = fundamental_unit(unit_d);
      return scalar_result(to_string(u) + "  norm " + quad_norm(u).get_str(), to_json(u));
    };
  });

  verify::Options options;
  auto* verify_cmd = app.add_subcommand("verify", "Oracle bijection and the invariant suites");
  verify_cmd->add_option("--cmax", options.c_max, "hypotenuse bound for the oracle comparison")
      ->check(CLI::Range(std::int64_t{1}, std::int64_t{1} << 31));
  verify_cmd->add_option("--fraction-bound", options.fraction_bound, "|num|, den for the parameter sweeps")
      ->check(CLI::Range(1, 100'000));
  verify_cmd->add_option("--semigroup-bound", options.semigroup_bound, "entries for the product rule sweep")
      ->check(CLI::Range(1, 4096));
  verify_cmd->add_option("--generation-bound", options.generation_bound, "p, q for decompose/evaluate")
      ->check(CLI::Range(1, 100'000));
  verify_cmd->add_option("--samples", options.group_samples, "random samples for the group laws")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--seed", options.seed, "seed for the random samples");
  verify_cmd->callback([&] { action = [&] { return verify_result(options); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  if (json_flag) format = Format::json;

  try {
    Result result = action();
    if (format == Format::json && result.value.is_array()) {
      // Listings are JSON Lines: one compact object per line.
      for (const auto& item : result.value) out << item.dump() << '\n';
    } else if (format == Format::json) {
      out << result.value.dump() << '\n';
    } else {
      for (const auto& line : result.lines) out << line << '\n';
    }
    return result.exit_code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::Parse ? 2 : 1;
  }
}

}  // namespace pythag::cli
