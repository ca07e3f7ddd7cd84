#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "pythag/cli.hpp"
#include "pythag/error.hpp"
#include "pythag/serialize.hpp"

using namespace pythag;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

json json_lines(const std::string& text) {
  json out = json::array();
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(json::parse(line));
  return out;
}

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("param and unparam") {
  CHECK(run({"param", "12/5"}).out == "(120,119,169)\n");
  CHECK(run({"param", "-2"}).out == "(-4,3,5)\n");
  CHECK(run({"param", "--", "-3/4"}).out == "(-24,-7,25)\n");
  CHECK(run({"unparam", "20,21,29"}).out == "5/2\n");
  CHECK(run({"unparam", "4", "-3", "5"}).out == "1/2\n");
  CHECK(run({"unparam", "(0,3,3)"}).code == 1);
  CHECK(run({"unparam", "3,4,6"}).code == 1);
}

TEST_CASE("group subcommands") {
  CHECK(run({"mul", "4,3,5", "3,4,5"}).out == "(12,35,37)\n");
  CHECK(run({"inv", "4,3,5"}).out == "(1/4,-3/16,5/16)\n");
  CHECK(run({"pow", "4,3,5", "2"}).out == "(16,30,34)\n");
  CHECK(run({"swap", "120,119,169"}).out == "(119,120,169)\n");
  CHECK(run({"normalize", "16,0,16"}).out == "(1,0,1)\n");
  CHECK(run({"normalize", "-6,8,10", "--positive-a"}).out == "(3,-4,-5)\n");
  CHECK(run({"klein", "1,0,-1"}).out == "+-\n");
  CHECK(run({"normal", "16,30,34"}).out == "scalar 2  r 4  klein ++\n");
  CHECK(run({"height", "3,-4,5"}).out == "9\n");
  CHECK(run({"excess", "3,4,5"}).out == "2\n");
  CHECK(run({"increment", "4,3,5"}).out == "1\n");
  CHECK(run({"increment", "1,0,1"}).code == 1);
  CHECK(run({"etale", "4,3,5"}).out == "alpha 5/4  beta 3/4\n");
}

TEST_CASE("involution subcommands") {
  CHECK(run({"cayley", "12/5"}).out == "17/7\n");
  Run degenerate = run({"cayley", "1"});
  CHECK(degenerate.code == 1);
  CHECK(degenerate.out.empty());
  CHECK(degenerate.err.find("DegenerateParameter") != std::string::npos);
  CHECK(run({"decompose", "5"}).out == "inv(mul(inv(G),pow(G,-1)))\n");
  CHECK(run({"eval", "inv(mul(inv(G),pow(G,-1)))"}).out == "value (5/16,3/4,13/16)\nclass (5,12,13)\n");
  CHECK(run({"eval", "inv(S)"}).code == 1);
  CHECK(run({"eval", "inv(G"}).code == 2);
}

TEST_CASE("family subcommand") {
  Run one = run({"family", "--diff-ab", "1", "--count", "5"});
  CHECK(one.code == 0);
  for (const char* t : {"(4,3,5)", "(20,21,29)", "(120,119,169)", "(696,697,985)", "(4060,4059,5741)"}) {
    CHECK(one.out.find(t) != std::string::npos);
  }
  Run three = run({"family", "--diff-ab", "3", "--count", "1"});
  CHECK(three.code == 1);
  CHECK(three.err.find("NoSolution") != std::string::npos);
  CHECK(three.err.find("mod 8") != std::string::npos);
  Run plus3 = run({"family", "--c-minus-2a", "3", "--count", "4"});
  CHECK(plus3.out.find("(95,168,193)") != std::string::npos);
  Run minus3 = run({"family", "--c-minus-2a", "-3", "--count", "4"});
  CHECK(minus3.code == 0);
  CHECK(minus3.out.find("(5044,8733,10085)") != std::string::npos);
  CHECK(run({"family", "--c-minus-2a", "2"}).code == 2);
  CHECK(run({"family"}).code == 2);
  CHECK(run({"family", "--diff-ab", "1", "--c-minus-2a", "1"}).code == 2);
}

TEST_CASE("seq subcommand") {
  Run st = run({"seq", "st", "--from", "5", "--to", "5"});
  CHECK(st.out.find("41") != std::string::npos);
  CHECK(st.out.find("29") != std::string::npos);
  CHECK(run({"seq", "pell"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"param", "1/2", "--bogus"}).code == 2);
  CHECK(run({"param"}).code == 2);
  CHECK(run({"param", "x"}).code == 2);
  CHECK(run({"param", "0"}).code == 1);
  Run help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("family") != std::string::npos);
}

TEST_CASE("verify subcommand") {
  Run v = run({"verify", "--cmax", "2000", "--fraction-bound", "40", "--semigroup-bound", "20",
               "--generation-bound", "30", "--samples", "200"});
  CHECK(v.code == 0);
  CHECK(v.out.find("FAIL") == std::string::npos);
  CHECK(std::count(v.out.begin(), v.out.end(), '\n') == 10);
}

TEST_CASE("output is deterministic") {
  std::vector<std::string> args = {"family", "--diff-ab", "7", "--count", "6", "--json"};
  CHECK(run(args).out == run(args).out);
  std::vector<std::string> word = {"decompose", "-9991/2048"};
  CHECK(run(word).out == run(word).out);
}

TEST_CASE("JSON output round trips") {
  json t = json::parse(run({"param", "12/5", "--json"}).out);
  CHECK(triple_from_json(t) == PythTriple(120, 119, 169));
  json r = json::parse(run({"--format", "json", "cayley", "2"}).out);
  CHECK(fraction_from_json(r) == ReducedFraction(Integer(3)));
  json inv = json::parse(run({"inv", "4,3,5", "--json"}).out);
  CHECK(rational_triple_from_json(inv) == RationalTriple(Rational(1, 4), Rational(-3, 16), Rational(5, 16)));
  json nf = json::parse(run({"normal", "-8/3,-2,10/3", "--json"}).out);
  NormalForm f = normal_form_from_json(nf);
  CHECK(to_triple(f) == RationalTriple(Rational(-8, 3), -2, Rational(10, 3)));
  CHECK(nf.at("klein") == "-+");
  json family = json_lines(run({"family", "--diff-ab", "7", "--count", "2", "--json"}).out);
  REQUIRE(family.is_array());
  REQUIRE(family.size() == 4);
  for (const auto& e : family) {
    PythTriple triple = triple_from_json(e.at("triple"));
    CHECK(from_param(fraction_from_json(e.at("r"))) == triple);
    CHECK(triple_from_json(e.at("image")) == PythTriple(triple.b(), triple.a(), triple.c()));
    CHECK(e.at("diff") == "7");
  }
  json c2a = json_lines(run({"family", "--c-minus-2a", "-1", "--count", "2", "--json"}).out);
  CHECK(c2a[0].at("degenerate") == true);
  CHECK(triple_from_json(c2a[1].at("triple")) == PythTriple(3, 4, 5));
  CHECK_THROWS_AS(triple_from_json(json{{"a", 3}, {"b", "4"}, {"c", "5"}}), Error);
  json seq = json_lines(run({"seq", "lambdamu", "--from", "1", "--to", "4", "--json"}).out);
  REQUIRE(seq.size() == 4);
  CHECK(seq[3] == json{{"j", 4}, {"x", "71"}, {"y", "41"}});
  CHECK(run({"param", "2", "--json"}).out == "{\"a\":\"4\",\"b\":\"3\",\"c\":\"5\"}\n");
}

TEST_CASE("PYTHAG_FORMAT sets the default format") {
  setenv("PYTHAG_FORMAT", "json", 1);
  Run j = run({"param", "2"});
  unsetenv("PYTHAG_FORMAT");
  CHECK(json::parse(j.out) == json{{"a", "4"}, {"b", "3"}, {"c", "5"}});
  setenv("PYTHAG_FORMAT", "json", 1);
  Run t = run({"param", "2", "--format", "table"});
  unsetenv("PYTHAG_FORMAT");
  CHECK(t.out == "(4,3,5)\n");
}
