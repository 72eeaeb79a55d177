#include "conegauge/scene.hpp"

#include <fstream>

namespace conegauge {

using nlohmann::json;

namespace {

const json& require_member(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) throw InputError(where + ": missing \"" + key + "\"");
    return obj.at(key);
}

Point parse_point(const json& arr, const std::string& where) {
    if (!arr.is_array()) throw InputError(where + ": expected an array of rationals");
    Point p;
    for (const auto& c : arr) p.push_back(parse_rational(c));
    return p;
}

std::size_t parse_index(const json& v, const std::string& where) {
    if (!v.is_number_unsigned()) throw InputError(where + ": vertex indices must be nonnegative integers");
    return v.get<std::size_t>();
}

}  // namespace

Rational parse_rational(const json& value) {
    if (value.is_string()) return Rational::parse(value.get<std::string>());
    if (value.is_number_integer()) return Rational(value.get<long>());
    throw InputError("expected a rational string such as \"3/4\", got " + value.dump());
}

Scene parse_scene(const json& doc) {
    if (!doc.is_object()) throw InputError("scene must be a JSON object");
    Scene scene;

    if (doc.contains("polytopes")) {
        for (const auto& [name, entry] : doc.at("polytopes").items()) {
            const std::string where = "polytope '" + name + "'";
            const json& verts = entry.is_object() ? require_member(entry, "vertices", where) : entry;
            if (!verts.is_array()) throw InputError(where + ": vertices must be an array");
            std::vector<Point> pts;
            for (const auto& v : verts) pts.push_back(parse_point(v, where));
            try {
                scene.polytopes.emplace(name, make_polytope(std::move(pts), name));
            } catch (const NotExtreme& e) {
                throw InputError(where + ": vertex " + std::to_string(e.index) + " is not an extreme point");
            } catch (const InputError& e) {
                throw InputError(where + ": " + e.what());
            }
        }
    }

    if (doc.contains("functions")) {
        for (const auto& [name, entry] : doc.at("functions").items()) {
            const std::string where = "function '" + name + "'";
            const std::string poly = require_member(entry, "polytope", where).get<std::string>();
            auto it = scene.polytopes.find(poly);
            if (it == scene.polytopes.end()) throw InputError(where + ": unknown polytope '" + poly + "'");
            RVector values = parse_point(require_member(entry, "values", where), where);
            if (values.size() != it->second->size())
                throw InputError(where + ": " + std::to_string(values.size()) + " values for " +
                                 std::to_string(it->second->size()) + " vertices");
            auto ext = affine_extend(*it->second, values);
            if (std::holds_alternative<NotAffine>(ext))
                throw InputError(where + ": vertex values do not extend to an affine function on '" + poly + "'");
            scene.functions.emplace(name, SceneFunction{poly, it->second, std::move(values), std::get<AffineFunc>(ext)});
        }
    }

    if (doc.contains("bijections")) {
        for (const auto& [name, entry] : doc.at("bijections").items()) {
            const std::string where = "bijection '" + name + "'";
            const std::string from = require_member(entry, "from", where).get<std::string>();
            const std::string to = require_member(entry, "to", where).get<std::string>();
            auto src = scene.polytopes.find(from);
            auto dst = scene.polytopes.find(to);
            if (src == scene.polytopes.end()) throw InputError(where + ": unknown polytope '" + from + "'");
            if (dst == scene.polytopes.end()) throw InputError(where + ": unknown polytope '" + to + "'");
            std::vector<std::pair<std::size_t, std::size_t>> pairs;
            for (const auto& p : require_member(entry, "pairs", where)) {
                if (!p.is_array() || p.size() != 2) throw InputError(where + ": pairs must be [i, j]");
                pairs.emplace_back(parse_index(p[0], where), parse_index(p[1], where));
            }
            try {
                scene.bijections.emplace(name, VertexBijection::from_pairs(src->second, dst->second, pairs));
            } catch (const InputError& e) {
                throw InputError(where + ": " + e.what());
            }
        }
    }

    if (doc.contains("metadata")) scene.metadata = doc.at("metadata");
    return scene;
}

Scene load_scene(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open scene file '" + path.string() + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError("scene file '" + path.string() + "': " + e.what());
    }
    return parse_scene(doc);
}

const PolytopeRef& Scene::polytope(const std::string& name) const {
    auto it = polytopes.find(name);
    if (it == polytopes.end()) throw InputError("unknown polytope '" + name + "'");
    return it->second;
}

const SceneFunction& Scene::function(const std::string& name) const {
    auto it = functions.find(name);
    if (it == functions.end()) throw InputError("unknown function '" + name + "'");
    return it->second;
}

std::string Scene::polytope_name(const PolytopeRef& k) const {
    for (const auto& [name, p] : polytopes)
        if (p == k) return name;
    return k->name();
}

const char* builtin_scene_json() {
    return R"json({
  "polytopes": {
    "triangle": [["0", "0"], ["1", "0"], ["0", "1"]],
    "square": [["0", "0"], ["1", "0"], ["0", "1"], ["1", "1"]]
  },
  "functions": {
    "f": { "polytope": "triangle", "values": ["2", "1", "4"] },
    "g": { "polytope": "triangle", "values": ["1", "1", "1"] },
    "h": { "polytope": "triangle", "values": ["1/2", "3", "5/4"] },
    "s": { "polytope": "square", "values": ["1", "2", "2", "3"] },
    "one": { "polytope": "square", "values": ["1", "1", "1", "1"] }
  },
  "bijections": {
    "cycle": { "from": "triangle", "to": "triangle", "pairs": [[0, 1], [1, 2], [2, 0]] },
    "swap": { "from": "triangle", "to": "triangle", "pairs": [[0, 1], [1, 0], [2, 2]] },
    "square-id": { "from": "square", "to": "square", "pairs": [[0, 0], [1, 1], [2, 2], [3, 3]] }
  },
  "metadata": { "name": "default" }
}
)json";
}

Scene builtin_scene() { return parse_scene(json::parse(builtin_scene_json())); }

}  // namespace conegauge
