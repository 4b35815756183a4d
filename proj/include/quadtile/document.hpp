#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "quadtile/certificate.hpp"
#include "quadtile/criteria.hpp"
#include "quadtile/tiling.hpp"

// JSON documents. Every exact value is a string: rationals as "num" or
// "num/den", elements of Q[sqrt(p)] as {"e": ..., "f": ...} under a
// document-level "p".
//
//   problem:     {"p", "shapes": [Quad...], "target": Quad}
//   tiling:      {"p", "bounds": {"W", "H"}, "tiles": [{"x","y","w","h","shape_index"?}]}
//   certificate: {"p", "k", "core": {...}, "reductions": [{"shape_index", "tiling"}]}
//
// Parse failures throw Error(ParseError) naming the offending JSON path or
// the byte offset of a syntax error.

namespace quadtile {

using json = nlohmann::json;

ShapeSpec parse_problem(std::string_view text);
json problem_to_json(const ShapeSpec& spec);

json quad_to_json(const Quad& q);
Quad quad_from_json(const FieldPtr& ctx, const json& j, const std::string& path);

json tiling_to_json(const Tiling& t);
Tiling tiling_from_json(const json& j);
Tiling parse_tiling(std::string_view text);

json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const FieldPtr& ctx, const json& j, const std::string& path);

json bundle_to_json(const CertificateBundle& bundle);
CertificateBundle bundle_from_json(const json& j);

}  // namespace quadtile
