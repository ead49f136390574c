#include "ecr/io.hpp"

#include "ecr/error.hpp"

namespace ecr::io {

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw Error(Errc::ParseError, "expected a rational string, got " + j.dump());
}

Json to_json(const std::vector<Rational>& seq) {
  Json arr = Json::array();
  for (const auto& q : seq) arr.push_back(to_json(q));
  return arr;
}

std::vector<Rational> sequence_from_json(const Json& j) {
  if (!j.is_array()) throw Error(Errc::ParseError, "expected a JSON array of rationals");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(rational_from_json(e));
  return out;
}

Json to_json(const Series& s) { return to_json(s.vector()); }

Series series_from_json(const Json& j) { return Series(sequence_from_json(j)); }

Json to_json(const CurvePoint& p) {
  if (p.is_infinity()) return {{"infinity", true}};
  return {{"x", to_json(p.x())}, {"y", to_json(p.y())}};
}

CurvePoint point_from_json(const Json& j) {
  if (!j.is_object()) throw Error(Errc::ParseError, "expected a point object");
  if (j.contains("infinity") && j["infinity"].is_boolean() && j["infinity"].get<bool>()) return CurvePoint::infinity();
  if (!j.contains("x") || !j.contains("y")) throw Error(Errc::ParseError, "point needs x and y");
  return CurvePoint::affine(rational_from_json(j["x"]), rational_from_json(j["y"]));
}

Json to_json(const Triangle& t) {
  Json rows = Json::array();
  for (const auto& row : t) rows.push_back(to_json(row));
  return rows;
}

Triangle triangle_from_json(const Json& j) {
  if (!j.is_array()) throw Error(Errc::ParseError, "expected an array of rows");
  Triangle t;
  for (const auto& row : j) t.push_back(sequence_from_json(row));
  return t;
}

std::string triangle_to_csv(const Triangle& t) {
  std::string out;
  for (const auto& row : t) {
    out += join(row);
    out += '\n';
  }
  return out;
}

Json to_json(const StepSet& s) {
  Json arr = Json::array();
  for (const Step& st : s.steps) arr.push_back({{"dx", st.dx}, {"dy", st.dy}, {"w", to_json(st.weight)}});
  if (s.origin_override) arr.push_back({{"origin_override", to_json(*s.origin_override)}});
  return arr;
}

StepSet stepset_from_json(const Json& j) {
  if (!j.is_array()) throw Error(Errc::ParseError, "step set must be a JSON array");
  StepSet s;
  for (const auto& e : j) {
    if (!e.is_object()) throw Error(Errc::ParseError, "step must be an object: " + e.dump());
    if (e.contains("origin_override")) {
      s.origin_override = rational_from_json(e["origin_override"]);
      continue;
    }
    if (!e.contains("dx") || !e.contains("dy") || !e["dx"].is_number_integer() || !e["dy"].is_number_integer())
      throw Error(Errc::ParseError, "step needs integer dx and dy: " + e.dump());
    Rational w = e.contains("w") ? rational_from_json(e["w"]) : Rational(1);
    s.steps.push_back({e["dx"].get<int>(), e["dy"].get<int>(), std::move(w)});
  }
  return s;
}

Json to_json(const AMatrix& am) {
  return {{"alpha", to_json(am.alpha)},
          {"beta", to_json(am.beta)},
          {"gamma", to_json(am.gamma)},
          {"delta", to_json(am.delta)}};
}

Json to_json(const JFraction& jf) { return {{"b", to_json(jf.b)}, {"lam", to_json(jf.lam)}}; }

JFraction jfraction_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("b") || !j.contains("lam"))
    throw Error(Errc::ParseError, "J-fraction needs \"b\" and \"lam\"");
  return {sequence_from_json(j["b"]), sequence_from_json(j["lam"])};
}

Json to_json(const SomosParams& p) { return {{"r", to_json(p.r)}, {"s", to_json(p.s)}}; }

Json curve_json(const CurveParams& E) {
  return {{"a", to_json(E.a())}, {"b", to_json(E.b())}, {"c", to_json(E.c())},
          {"discriminant", to_json(E.discriminant())}};
}

Json to_json(const VerifyReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return {{"curve", curve_json(r.curve)}, {"order", r.order}, {"pass", r.all_pass()}, {"checks", checks}};
}

}  // namespace ecr::io
