#pragma once

// JSON descriptors for boundary pairs and catenoid specs. Parse errors carry
// the offending field path, e.g. "circle1.r".

#include <string>

#include <json.hpp>

#include "lmcat/counting.hpp"

namespace lmcat {

using json = nlohmann::json;

namespace detail {

[[noreturn]] inline void field_error(const std::string& path, const std::string& why) {
  throw Error(ErrorKind::InvalidInput, path + ": " + why);
}

inline const json& field(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) field_error(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) field_error(path.empty() ? key : path + "." + key, "missing");
  return *it;
}

inline std::string join_path(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

inline double number_field(const json& obj, const std::string& key, const std::string& path) {
  const json& v = field(obj, key, path);
  if (!v.is_number()) field_error(join_path(path, key), "expected a number");
  return v.get<double>();
}

inline int side_field(const json& obj, const std::string& path) {
  if (!obj.contains("side")) return 1;
  const json& v = obj["side"];
  if (!v.is_number_integer() || (v.get<int>() != 1 && v.get<int>() != -1))
    field_error(join_path(path, "side"), "must be +1 or -1");
  return v.get<int>();
}

inline std::string string_field(const json& obj, const std::string& key, const std::string& path) {
  const json& v = field(obj, key, path);
  if (!v.is_string()) field_error(join_path(path, key), "expected a string");
  return v.get<std::string>();
}

}  // namespace detail

inline RotationClass parse_rotation_class(const std::string& s, const std::string& path = "class") {
  for (auto c : {RotationClass::Elliptic, RotationClass::HyperbolicI, RotationClass::HyperbolicII,
                 RotationClass::Parabolic})
    if (s == to_string(c)) return c;
  detail::field_error(path, "unknown rotation class '" + s + "'");
}

inline CausalCharacter parse_causal(const std::string& s, const std::string& path = "causal") {
  if (s == "spacelike") return CausalCharacter::Spacelike;
  if (s == "timelike") return CausalCharacter::Timelike;
  detail::field_error(path, "expected 'spacelike' or 'timelike'");
}

inline ProfileFamily parse_family(const std::string& s, const std::string& path = "family") {
  for (auto f : {ProfileFamily::SinhOverA, ProfileFamily::SinOverA, ProfileFamily::CoshOverA,
                 ProfileFamily::CubicPlus, ProfileFamily::CubicMinus})
    if (s == to_string(f)) return f;
  detail::field_error(path, "unknown profile family '" + s + "'");
}

inline CircleSpec parse_circle(const json& j, RotationClass cls, const std::string& path) {
  if (!j.is_object()) detail::field_error(path, "expected an object");
  CircleSpec c;
  switch (cls) {
    case RotationClass::Elliptic:
      c = CircleSpec::elliptic(detail::number_field(j, "z", path), detail::number_field(j, "r", path));
      break;
    case RotationClass::HyperbolicI:
      c = CircleSpec::hyperbolic_i(detail::number_field(j, "x", path), detail::number_field(j, "r", path),
                                   detail::side_field(j, path));
      break;
    case RotationClass::HyperbolicII:
      c = CircleSpec::hyperbolic_ii(detail::number_field(j, "x", path), detail::number_field(j, "r", path),
                                    detail::side_field(j, path));
      break;
    case RotationClass::Parabolic:
      c = CircleSpec::parabolic(detail::number_field(j, "a", path), detail::number_field(j, "c", path));
      break;
  }
  c.validate(path);
  return c;
}

inline json to_json(const CircleSpec& c) {
  switch (c.cls) {
    case RotationClass::Elliptic: return {{"z", c.plane}, {"r", c.radius}};
    case RotationClass::HyperbolicI:
    case RotationClass::HyperbolicII: return {{"x", c.plane}, {"r", c.radius}, {"side", c.side}};
    case RotationClass::Parabolic: return {{"a", c.anchor_a}, {"c", c.anchor_c}};
  }
  return {};
}

inline BoundaryPair parse_pair(const json& j) {
  if (!j.is_object()) detail::field_error("descriptor", "expected a JSON object");
  const RotationClass cls = parse_rotation_class(detail::string_field(j, "class", ""));
  BoundaryPair p{parse_circle(detail::field(j, "circle1", ""), cls, "circle1"),
                 parse_circle(detail::field(j, "circle2", ""), cls, "circle2")};
  validate(p);
  return p;
}

inline BoundaryPair parse_pair_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::InvalidInput, std::string("descriptor: malformed JSON: ") + e.what());
  }
  return parse_pair(j);
}

inline json to_json(const BoundaryPair& p) {
  return {{"class", to_string(p.c1.cls)}, {"circle1", to_json(p.c1)}, {"circle2", to_json(p.c2)}};
}

inline json to_json(const CatenoidSpec& c) {
  json j{{"class", to_string(c.cls)},  {"causal", to_string(c.causal)},
         {"family", to_string(c.profile.family)}, {"a", c.profile.a},
         {"b", c.profile.b},           {"sign", c.profile.sign}};
  if (!c.subfamily.empty()) j["subfamily"] = c.subfamily;
  return j;
}

inline CatenoidSpec parse_spec(const json& j) {
  CatenoidSpec c;
  c.cls = parse_rotation_class(detail::string_field(j, "class", ""));
  c.causal = parse_causal(detail::string_field(j, "causal", ""));
  c.profile.family = parse_family(detail::string_field(j, "family", ""));
  c.profile.a = detail::number_field(j, "a", "");
  c.profile.b = j.contains("b") ? detail::number_field(j, "b", "") : 0.0;
  c.profile.sign = j.contains("sign") ? detail::side_field(json{{"side", j["sign"]}}, "sign") : 1;
  if (j.contains("subfamily") && j["subfamily"].is_string()) c.subfamily = j["subfamily"].get<std::string>();
  return c;
}

inline json to_json(const Config& c) {
  return {{"step", c.roots.step},
          {"merge_distance", c.roots.merge_distance},
          {"merge_value", c.roots.merge_value},
          {"derivative_tol", c.roots.derivative_tol},
          {"residual_tol", c.residual_tol},
          {"singular_margin", c.singular_margin},
          {"equal_radius_tol", c.equal_radius_tol},
          {"sine_upper", c.sine_upper}};
}

inline json to_json(const SolutionSet& s) {
  json sols = json::array();
  for (const auto& x : s.solutions) {
    json e = to_json(x.spec);
    e["multiplicity"] = x.multiplicity == Multiplicity::Tangential ? "tangential" : "simple";
    e["congruence_class"] = x.congruence_class;
    e["crosses_axis"] = x.crosses_axis;
    sols.push_back(e);
  }
  json subs = json::array();
  for (const auto& st : s.subfamilies)
    subs.push_back({{"label", st.label}, {"raw", st.raw}, {"deduped", st.deduped}, {"tangential", st.tangential}});
  json j{{"cell", to_string(s.cell)},     {"raw_count", s.raw_count}, {"deduped_count", s.deduped_count},
         {"solutions", sols},             {"subfamilies", subs},      {"notes", s.notes}};
  j["obstruction"] = s.obstruction ? json(*s.obstruction) : json(nullptr);
  return j;
}

inline json to_json(const CellResult& r) {
  json j = to_json(r.set);
  j["status"] = to_string(r.status);
  if (!r.message.empty()) j["message"] = r.message;
  return j;
}

inline json to_json(const CriticalConstants& c) {
  return {{"c1_catenary", c.c1_catenary},
          {"u_star", c.u_star},
          {"h_star_1a", c.h_star_1a},
          {"a_star_1a", c.a_star_1a},
          {"h_star_2a", c.h_star_2a},
          {"a_star_2a", c.a_star_2a},
          {"onset_1b", c.onset_1b},
          {"onset_2b", c.onset_2b},
          {"c0", c.c0},
          {"residuals",
           {{"c1_catenary", c.residual_c1},
            {"h_star_1a", c.residual_h_star_1a},
            {"h_star_1a_slope", c.slope_h_star_1a},
            {"h_star_2a", c.residual_h_star_2a},
            {"h_star_2a_slope", c.slope_h_star_2a}}}};
}

}  // namespace lmcat
