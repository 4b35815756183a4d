#include "quadtile/document.hpp"

#include "quadtile/error.hpp"

namespace quadtile {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::ParseError, path + ": " + what);
}

const json& member(const json& j, const std::string& path, const char* key) {
  if (!j.is_object()) fail(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing \"") + key + "\"");
  return *it;
}

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }

Rational rational_from_json(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a rational as a string");
  try {
    return Rational::parse(j.get_ref<const std::string&>());
  } catch (const Error& err) {
    fail(path, err.what());
  }
}

Rational rational_member(const json& j, const std::string& path, const char* key) {
  return rational_from_json(member(j, path, key), join(path, key));
}

json parse_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& err) {
    throw Error(ErrorKind::ParseError, "at byte " + std::to_string(err.byte) + ": " + err.what());
  }
}

FieldPtr field_from_json(const json& j) { return validate_context(rational_member(j, "", "p")); }

std::size_t index_from_json(const json& j, const std::string& path) {
  if (!j.is_number_unsigned()) fail(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

}  // namespace

json quad_to_json(const Quad& q) { return json{{"e", q.e().str()}, {"f", q.f().str()}}; }

Quad quad_from_json(const FieldPtr& ctx, const json& j, const std::string& path) {
  return ctx->make(rational_member(j, path, "e"), rational_member(j, path, "f"));
}

ShapeSpec parse_problem(std::string_view text) {
  const json doc = parse_text(text);
  FieldPtr ctx = field_from_json(doc);
  const json& shapes_json = member(doc, "", "shapes");
  if (!shapes_json.is_array()) fail("shapes", "expected an array");
  std::vector<Quad> shapes;
  for (std::size_t i = 0; i < shapes_json.size(); ++i) {
    shapes.push_back(quad_from_json(ctx, shapes_json[i], "shapes[" + std::to_string(i) + "]"));
  }
  Quad target = quad_from_json(ctx, member(doc, "", "target"), "target");
  return make_spec(std::move(ctx), std::move(shapes), std::move(target));
}

json problem_to_json(const ShapeSpec& spec) {
  json shapes = json::array();
  for (const auto& x : spec.shapes) shapes.push_back(quad_to_json(x));
  return json{{"p", spec.ctx->p().str()}, {"shapes", std::move(shapes)}, {"target", quad_to_json(spec.target)}};
}

json tiling_to_json(const Tiling& t) {
  json tiles = json::array();
  for (const auto& tile : t.tiles) {
    json entry{{"x", quad_to_json(tile.x)}, {"y", quad_to_json(tile.y)}, {"w", quad_to_json(tile.w)},
               {"h", quad_to_json(tile.h)}};
    if (tile.shape_index) entry["shape_index"] = *tile.shape_index;
    tiles.push_back(std::move(entry));
  }
  return json{{"p", t.field()->p().str()},
              {"bounds", {{"W", quad_to_json(t.width)}, {"H", quad_to_json(t.height)}}},
              {"tiles", std::move(tiles)}};
}

Tiling tiling_from_json(const json& j) {
  const FieldPtr ctx = field_from_json(j);
  const json& bounds = member(j, "", "bounds");
  Tiling t{quad_from_json(ctx, member(bounds, "bounds", "W"), "bounds.W"),
           quad_from_json(ctx, member(bounds, "bounds", "H"), "bounds.H"),
           {}};
  const json& tiles = member(j, "", "tiles");
  if (!tiles.is_array()) fail("tiles", "expected an array");
  t.tiles.reserve(tiles.size());
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    const std::string path = "tiles[" + std::to_string(i) + "]";
    const json& tj = tiles[i];
    PlacedTile tile{quad_from_json(ctx, member(tj, path, "x"), path + ".x"),
                    quad_from_json(ctx, member(tj, path, "y"), path + ".y"),
                    quad_from_json(ctx, member(tj, path, "w"), path + ".w"),
                    quad_from_json(ctx, member(tj, path, "h"), path + ".h"),
                    std::nullopt};
    if (const auto it = tj.find("shape_index"); it != tj.end() && !it->is_null()) {
      tile.shape_index = index_from_json(*it, path + ".shape_index");
    }
    t.tiles.push_back(std::move(tile));
  }
  return t;
}

Tiling parse_tiling(std::string_view text) { return tiling_from_json(parse_text(text)); }

json certificate_to_json(const Certificate& cert) {
  return json{{"coeffs", {{"A", cert.coeffs.A.str()}, {"B", cert.coeffs.B.str()}, {"C", cert.coeffs.C.str()}}},
              {"shape", quad_to_json(cert.shape)},
              {"target", quad_to_json(cert.target)},
              {"leading", cert.leading.str()},
              {"quarter_discriminant", cert.quarter_discriminant.str()}};
}

Certificate certificate_from_json(const FieldPtr& ctx, const json& j, const std::string& path) {
  const json& coeffs = member(j, path, "coeffs");
  const std::string cpath = join(path, "coeffs");
  return Certificate{{rational_member(coeffs, cpath, "A"), rational_member(coeffs, cpath, "B"),
                      rational_member(coeffs, cpath, "C")},
                     quad_from_json(ctx, member(j, path, "shape"), join(path, "shape")),
                     quad_from_json(ctx, member(j, path, "target"), join(path, "target")),
                     rational_member(j, path, "leading"),
                     rational_member(j, path, "quarter_discriminant")};
}

json bundle_to_json(const CertificateBundle& bundle) {
  json reductions = json::array();
  for (std::size_t n = 0; n < bundle.reductions.size(); ++n) {
    reductions.push_back({{"shape_index", bundle.reduced[n]}, {"tiling", tiling_to_json(bundle.reductions[n])}});
  }
  return json{{"p", bundle.core.shape.p().str()},
              {"k", bundle.k},
              {"core", certificate_to_json(bundle.core)},
              {"reductions", std::move(reductions)}};
}

CertificateBundle bundle_from_json(const json& j) {
  const FieldPtr ctx = field_from_json(j);
  CertificateBundle bundle{index_from_json(member(j, "", "k"), "k"),
                           certificate_from_json(ctx, member(j, "", "core"), "core"),
                           {},
                           {}};
  const json& reductions = member(j, "", "reductions");
  if (!reductions.is_array()) fail("reductions", "expected an array");
  for (std::size_t n = 0; n < reductions.size(); ++n) {
    const std::string path = "reductions[" + std::to_string(n) + "]";
    bundle.reduced.push_back(index_from_json(member(reductions[n], path, "shape_index"), path + ".shape_index"));
    Tiling t = tiling_from_json(member(reductions[n], path, "tiling"));
    if (!t.field()->same_field(*ctx)) throw Error(ErrorKind::ContextMismatch, path + " uses another p");
    bundle.reductions.push_back(std::move(t));
  }
  return bundle;
}

}  // namespace quadtile
