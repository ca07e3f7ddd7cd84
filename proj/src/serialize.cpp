#include "pythag/serialize.hpp"

#include "pythag/error.hpp"

namespace pythag {

namespace {

const std::string& string_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_string()) {
    throw Error(ErrorKind::Parse, std::string("expected string field '") + key + "' in " + j.dump());
  }
  return j.at(key).get_ref<const std::string&>();
}

}  // namespace

json to_json(const PythTriple& t) {
  return {{"a", t.a().get_str()}, {"b", t.b().get_str()}, {"c", t.c().get_str()}};
}

json to_json(const RationalTriple& t) {
  return {{"a", to_string(t.a())}, {"b", to_string(t.b())}, {"c", to_string(t.c())}};
}

json to_json(const ReducedFraction& r) { return to_string(r); }

json to_json(const NormalForm& f) {
  return {{"scalar", to_string(ReducedFraction(f.scalar))}, {"r", to_string(f.param)}, {"klein", to_string(f.klein)}};
}

json to_json(const QuadElem& u) { return {{"d", u.d}, {"x", u.x.get_str()}, {"y", u.y.get_str()}}; }

json to_json(const DiffFamilyEntry& e) {
  return {{"j", e.j},
          {"r", to_json(e.r)},
          {"triple", to_json(e.triple)},
          {"diff", e.diff.get_str()},
          {"image_r", to_json(e.image_r)},
          {"image", to_json(e.image)},
          {"base", to_json(e.base)}};
}

json to_json(const CMinus2aEntry& e) {
  json out = {{"j", e.j}, {"r", to_json(e.r)}, {"triple", to_json(e.triple)}, {"diff", e.value.get_str()}};
  if (e.degenerate) out["degenerate"] = true;
  return out;
}

PythTriple triple_from_json(const json& j) {
  return PythTriple(parse_integer(string_field(j, "a")), parse_integer(string_field(j, "b")),
                    parse_integer(string_field(j, "c")));
}

RationalTriple rational_triple_from_json(const json& j) {
  return RationalTriple(parse_rational(string_field(j, "a")), parse_rational(string_field(j, "b")),
                        parse_rational(string_field(j, "c")));
}

ReducedFraction fraction_from_json(const json& j) {
  if (!j.is_string()) throw Error(ErrorKind::Parse, "expected a fraction string, got " + j.dump());
  return parse_fraction(j.get_ref<const std::string&>());
}

NormalForm normal_form_from_json(const json& j) {
  return NormalForm(parse_rational(string_field(j, "scalar")), parse_fraction(string_field(j, "r")),
                    parse_klein(string_field(j, "klein")));
}

}  // namespace pythag
