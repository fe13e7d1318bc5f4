#include "rauzy/json_io.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace rauzy {

using nlohmann::json;

json annotated(double value, Rounding dir) {
  return json{{"value", value}, {"rounding", std::string(to_string(dir))}};
}

json to_json(const BoundReport& r) {
  return json{
      {"m", r.m},
      {"delta", annotated(r.delta, Rounding::Up)},
      {"factor1", annotated(r.factor1, Rounding::Up)},
      {"factor2", annotated(r.factor2, Rounding::Up)},
      {"lhs", annotated(std::isfinite(r.lhs) ? r.lhs : -1.0, Rounding::Up)},
      {"lhs_finite", std::isfinite(r.lhs)},
      {"dimension_bound", annotated(1.0 + r.delta, Rounding::Up)},
      {"verdict", r.verdict == Verdict::Holds ? "holds" : "fails"},
      {"diverged", r.diverged},
      {"iterations", r.iterations},
      {"wall_ms", annotated(r.wall_ms, Rounding::Nearest)},
  };
}

BoundReport bound_report_from_json(const json& j) {
  BoundReport r;
  r.m = j.at("m").get<int>();
  r.delta = j.at("delta").at("value").get<double>();
  r.factor1 = j.at("factor1").at("value").get<double>();
  r.factor2 = j.at("factor2").at("value").get<double>();
  r.lhs = j.at("lhs").at("value").get<double>();
  if (!j.at("lhs_finite").get<bool>()) r.lhs = std::numeric_limits<double>::infinity();
  r.verdict = j.at("verdict").get<std::string>() == "holds" ? Verdict::Holds : Verdict::Fails;
  r.diverged = j.at("diverged").get<bool>();
  r.iterations = j.at("iterations").get<int>();
  r.wall_ms = j.at("wall_ms").at("value").get<double>();
  return r;
}

json to_json(const LemmaReport& r) {
  return json{
      {"lemma", r.lemma},
      {"n", r.n},
      {"m", r.m},
      {"delta", annotated(r.delta, Rounding::Nearest)},
      {"checked_count", r.checked},
      {"indeterminate", r.indeterminate},
      {"worst_slack", annotated(r.worst_slack, Rounding::Down)},
      {"violations", r.violations},
  };
}

json to_json(const CoverSum& c) {
  json components = json::object();
  for (const auto& [tag, value] : c.components) {
    components[tag.str()] = annotated(value, Rounding::Up);
  }
  return json{
      {"n", c.n},
      {"m", c.m},
      {"delta", annotated(c.delta, Rounding::Nearest)},
      {"xn", annotated(c.xn, Rounding::Up)},
      {"components", components},
  };
}

json to_json(const Triangle& t) {
  json verts = json::array();
  for (const auto& v : t.vertices) {
    json coords = json::array();
    for (int i = 0; i < 3; ++i) {
      coords.push_back(json::array({boost::multiprecision::numerator(v(i)).str(),
                                    boost::multiprecision::denominator(v(i)).str()}));
    }
    verts.push_back(coords);
  }
  const Rational ar = shoelace_area_ratio(t.vertices);
  return json{
      {"word", t.word.str()},
      {"vertices", verts},
      {"area_ratio", boost::multiprecision::numerator(ar).str() + "/" +
                         boost::multiprecision::denominator(ar).str()},
      {"diameter", annotated(diameter(t, Rounding::Up), Rounding::Up)},
  };
}

}  // namespace rauzy
