#pragma once

#include "descent/descent_map.hpp"
#include "descent/torsor.hpp"

#include <json.hpp>

#include <string>
#include <variant>

namespace descent {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "descent-kit/1";

json to_json(const Rational& r);
json to_json(const Cyclo& x);
json to_json(const KummerElement& x);
json to_json(const Point& P);
json to_json(const Form& F);
json to_json(const CMatrix& M);
json to_json(const Series& s);
json to_json(const Report& r);

// A field element: an array of p-1 rationals (strings "n" or "n/d", or
// integers), or a single rational.
Cyclo cyclo_from_json(const json& j, int p, const std::string& where);
// Text given on the command line: JSON, or a bare rational such as 3/2.
Cyclo parse_field_arg(const std::string& text, int p, const std::string& where);
KummerElement kummer_from_json(const json& j, const AlgebraPtr& alg, const std::string& where);
Point point_from_json(const json& j, int p, size_t n, const std::string& where);
Form form_from_json(const json& j, int p, size_t nvars, const std::string& where);
CMatrix matrix_from_json(const json& j, int p, size_t n, const std::string& where);
json parse_json_text(const std::string& text, const std::string& where);

using Model = std::variant<CubicTorsor, QuinticTorsor>;

json model_to_json(const CubicTorsor& m);
json model_to_json(const QuinticTorsor& m);
// The stored forms are taken as they are (not rebuilt from a and beta).
Model model_from_json(const json& j, const PrecisionConfig& cfg = {});

} // namespace descent
