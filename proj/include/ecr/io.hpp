#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ecr/curve.hpp"
#include "ecr/pipeline.hpp"
#include "ecr/riordan.hpp"
#include "ecr/series.hpp"
#include "ecr/transforms.hpp"

// JSON shapes shared by the CLI and the Python module. Rationals are always
// lowest-terms strings ("p" or "p/q").
namespace ecr::io {

using Json = nlohmann::json;

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const std::vector<Rational>& seq);
std::vector<Rational> sequence_from_json(const Json& j);

Json to_json(const Series& s);
Series series_from_json(const Json& j);

/// {"x":"p/q","y":"p/q"} or {"infinity":true}
Json to_json(const CurvePoint& p);
CurvePoint point_from_json(const Json& j);

Json to_json(const Triangle& t);
Triangle triangle_from_json(const Json& j);
/// One row per line, comma separated.
std::string triangle_to_csv(const Triangle& t);

/// [{"dx":1,"dy":1,"w":"2"}, ...]; an origin override is carried as an
/// extra object {"origin_override":"-1"}.
Json to_json(const StepSet& s);
StepSet stepset_from_json(const Json& j);

Json to_json(const AMatrix& am);

/// {"b":[...],"lam":[...]}
Json to_json(const JFraction& jf);
JFraction jfraction_from_json(const Json& j);

Json to_json(const SomosParams& p);

Json curve_json(const CurveParams& curve);

/// {"curve":..., "order":n, "checks":[{"name":..., "pass":bool, "detail":...}]}
Json to_json(const VerifyReport& r);

}  // namespace ecr::io
