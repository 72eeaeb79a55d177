#pragma once

#include <json.hpp>

#include <filesystem>
#include <map>
#include <string>

#include "conegauge/convex_core.hpp"
#include "conegauge/maps.hpp"

namespace conegauge {

struct SceneFunction {
    std::string polytope;
    PolytopeRef domain;
    RVector values;
    AffineFunc affine;
};

/**
 * Polytopes, functions and vertex bijections read from a JSON scene:
 *
 *   {
 *     "polytopes":  { "tri": [["0","0"], ["1","0"], ["0","1"]] },
 *     "functions":  { "f": { "polytope": "tri", "values": ["2","1","4"] } },
 *     "bijections": { "a": { "from": "tri", "to": "tri", "pairs": [[0,1],[1,2],[2,0]] } },
 *     "metadata":   { ... }
 *   }
 *
 * Rationals are strings "p/q" or integer strings (JSON integers are also
 * accepted). A polytope may also be written { "vertices": [...] }.
 * All errors are InputError.
 */
struct Scene {
    std::map<std::string, PolytopeRef> polytopes;
    std::map<std::string, SceneFunction> functions;
    std::map<std::string, VertexBijection> bijections;
    nlohmann::json metadata;

    [[nodiscard]] const PolytopeRef& polytope(const std::string& name) const;
    [[nodiscard]] const SceneFunction& function(const std::string& name) const;
    [[nodiscard]] std::string polytope_name(const PolytopeRef& k) const;
};

Rational parse_rational(const nlohmann::json& value);
Scene parse_scene(const nlohmann::json& doc);
Scene load_scene(const std::filesystem::path& path);

/// Scene used when no --scene is given: triangle, unit square and a few functions and bijections.
const char* builtin_scene_json();
Scene builtin_scene();

}  // namespace conegauge
