#pragma once

#include <json.hpp>

#include "rauzy/oracle.hpp"
#include "rauzy/simplex.hpp"
#include "rauzy/solver.hpp"

namespace rauzy {

// JSON records. Real-valued fields carry a rounding annotation
// {"value": ..., "rounding": "up"|"down"|"nearest"}; integers are exact and
// stay plain.

nlohmann::json annotated(double value, Rounding dir);

nlohmann::json to_json(const BoundReport& report);
BoundReport bound_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const LemmaReport& report);
nlohmann::json to_json(const CoverSum& cover);

// {word, vertices as numerator/denominator strings, area_ratio, diameter}.
nlohmann::json to_json(const Triangle& t);

}  // namespace rauzy
