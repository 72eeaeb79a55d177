#include <CLI11.hpp>

#include <algorithm>
#include <sstream>

#include "conegauge/cli.hpp"
#include "conegauge/extremal.hpp"
#include "conegauge/gauges.hpp"

namespace conegauge::cli {

using ojson = nlohmann::ordered_json;

namespace {

struct GlobalFlags {
    std::string scene_path;
    std::uint64_t seed = 0;
    std::size_t trials = 100;
    double tol = 1e-9;
    bool json = false;
};

Scene open_scene(const GlobalFlags& g) { return g.scene_path.empty() ? builtin_scene() : load_scene(g.scene_path); }

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

double parse_double(const std::string& text) {
    try {
        std::size_t used = 0;
        double x = std::stod(text, &used);
        if (used != text.size()) throw InputError("");
        return x;
    } catch (const std::exception&) {
        throw InputError("not a number: '" + text + "'");
    }
}

Eigen::VectorXd parse_coords(const std::string& text) {
    const auto parts = split(text, ',');
    Eigen::VectorXd v(static_cast<Eigen::Index>(parts.size()));
    for (std::size_t i = 0; i < parts.size(); ++i) v[static_cast<Eigen::Index>(i)] = parse_double(parts[i]);
    return v;
}

// "lambda:v1,v2;lambda:v1,v2"
std::vector<spin::SpinElement> parse_family(const std::string& text, std::size_t dim) {
    std::vector<spin::SpinElement> family;
    for (const auto& entry : split(text, ';')) {
        const auto colon = entry.find(':');
        if (colon == std::string::npos) throw InputError("family entries are written lambda:v1,...,vn");
        spin::SpinElement e{parse_double(entry.substr(0, colon)), parse_coords(entry.substr(colon + 1))};
        if (e.dim() != dim) throw DimensionMismatch("family element has dimension " + std::to_string(e.dim()));
        family.push_back(std::move(e));
    }
    return family;
}

ojson to_json(const RVector& v) {
    ojson arr = ojson::array();
    for (const auto& x : v) arr.push_back(x.str());
    return arr;
}

void emit(std::ostream& out, const ojson& j) { out << j.dump(2) << '\n'; }

int emit_report(std::ostream& out, const Report& r) {
    emit(out, r.to_json());
    return r.exit_code();
}

struct QueryArgs {
    std::string kind;
    std::vector<std::string> names;
    std::string polytope;
    std::size_t psi = 0;
    std::string point;
};

std::pair<const SceneFunction*, const SceneFunction*> two_functions(const Scene& scene, const QueryArgs& q) {
    if (q.names.size() != 2) throw InputError(q.kind + " expects two function names");
    const auto& f = scene.function(q.names[0]);
    const auto& g = scene.function(q.names[1]);
    if (f.domain != g.domain) throw InputError("'" + q.names[0] + "' and '" + q.names[1] + "' live on different polytopes");
    return {&f, &g};
}

int run_query(const QueryArgs& q, const GlobalFlags& flags, std::ostream& out) {
    const Scene scene = open_scene(flags);
    ojson j;
    j["query"] = q.kind;
    std::string plain;

    if (q.kind == "gauge-M" || q.kind == "gauge-m" || q.kind == "thompson") {
        auto [f, g] = two_functions(scene, q);
        j["f"] = q.names[0];
        j["g"] = q.names[1];
        if (q.kind == "thompson") {
            plain = thompson_factor(f->values, g->values).str();
        } else {
            const auto r = q.kind == "gauge-M" ? gauge_M(f->values, g->values) : gauge_m(f->values, g->values);
            plain = r.value.str();
            j["witness_vertex"] = r.witness;
        }
        j["value"] = plain;
    } else if (q.kind == "p-value") {
        const auto& k = scene.polytope(q.polytope);
        const Point x = parse_rvector(q.point);
        const auto r = p_value_with_witness(*k, q.psi, x);
        plain = r.value.str();
        j["polytope"] = q.polytope;
        j["psi"] = q.psi;
        j["point"] = to_json(x);
        j["value"] = plain;
        j["minimizer"] = {{"linear", to_json(r.minimizer.linear)}, {"constant", r.minimizer.constant.str()}};
    } else if (q.kind == "affinity-probe") {
        const auto& k = scene.polytope(q.polytope);
        const auto r = affinity_probe(*k, q.psi, flags.trials, flags.seed);
        j["polytope"] = q.polytope;
        j["psi"] = q.psi;
        if (const auto* cx = std::get_if<AffinityCounterexample>(&r)) {
            plain = "counterexample: p" + to_string(cx->a) + "=" + cx->p_a.str() + ", p" + to_string(cx->b) + "=" +
                    cx->p_b.str() + ", p" + to_string(cx->midpoint) + "=" + cx->p_mid.str();
            j["result"] = "counterexample";
            j["a"] = to_json(cx->a);
            j["b"] = to_json(cx->b);
            j["midpoint"] = to_json(cx->midpoint);
            j["p_a"] = cx->p_a.str();
            j["p_b"] = cx->p_b.str();
            j["p_mid"] = cx->p_mid.str();
        } else {
            const auto n = std::get<AffineVerdict>(r).pairs_checked;
            plain = "affine on " + std::to_string(n) + " pairs";
            j["result"] = "affine";
            j["pairs_checked"] = n;
        }
    } else {
        throw InputError("unknown query '" + q.kind + "'");
    }

    if (flags.json)
        emit(out, j);
    else
        out << plain << '\n';
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact gauge geometry of positive affine functions on polytopes", "conegauge"};
    app.require_subcommand(1);
    GlobalFlags flags;
    app.add_option("--scene", flags.scene_path, "Scene JSON file (default: built-in scene)");
    app.add_option("--seed", flags.seed, "Seed for random functions and points");
    app.add_option("--trials", flags.trials, "Random samples per suite");
    app.add_option("--tol", flags.tol, "Float tolerance for spin-factor checks");
    app.add_flag("--json", flags.json, "Print query results as JSON");

    const std::vector<std::string> suites{"reversing", "preserving", "involution", "derivative",
                                          "atomicity", "gauges",     "all"};
    std::string which;
    auto* verify = app.add_subcommand("verify", "Run a verification suite over the scene")->fallthrough();
    verify->add_option("suite", which, "Suite name")->required()->check(CLI::IsMember(suites));

    std::vector<std::pair<CLI::App*, std::string>> aliases;
    for (const auto& [name, suite] : std::vector<std::pair<std::string, std::string>>{
             {"verify-reversing", "reversing"},
             {"verify-preserving", "preserving"},
             {"involution", "involution"},
             {"derivative", "derivative"}})
        aliases.emplace_back(app.add_subcommand(name, "Alias for verify " + suite)->fallthrough(), suite);

    QueryArgs query;
    const std::vector<std::string> kinds{"gauge-M", "gauge-m", "thompson", "p-value", "affinity-probe"};
    auto add_query_options = [&](CLI::App* sub) {
        sub->add_option("--polytope", query.polytope, "Polytope name");
        sub->add_option("--psi", query.psi, "Vertex index of psi");
        sub->add_option("--point", query.point, "Point as comma-separated rationals");
    };
    auto* query_cmd = app.add_subcommand("query", "Print an exact value")->fallthrough();
    query_cmd->add_option("kind", query.kind, "Query name")->required()->check(CLI::IsMember(kinds));
    query_cmd->add_option("functions", query.names, "Function names");
    add_query_options(query_cmd);
    auto* pvalue_cmd = app.add_subcommand("p-value", "Alias for query p-value")->fallthrough();
    add_query_options(pvalue_cmd);
    auto* probe_cmd = app.add_subcommand("affinity-probe", "Alias for query affinity-probe")->fallthrough();
    add_query_options(probe_cmd);

    std::size_t dim = 0;
    std::size_t pairs = 100;
    std::string psi_text;
    std::string family_text;
    auto* spin_verify = app.add_subcommand("spin-verify", "Check Jordan inversion reverses spin-factor gauges")
                            ->fallthrough();
    spin_verify->add_option("--dim", dim, "Dimension n of the ball")->required();
    spin_verify->add_option("--pairs", pairs, "Random pairs");
    auto* spin_probe = app.add_subcommand("spin-probe", "Probe the boundary representation at psi")->fallthrough();
    spin_probe->add_option("--dim", dim, "Dimension n of the ball")->required();
    spin_probe->add_option("--psi", psi_text, "Boundary point, comma-separated")->required();
    spin_probe->add_option("--family", family_text, "Elements lambda:v1,...,vn separated by ';'");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        SuiteOptions opts{flags.seed, flags.trials};
        if (verify->parsed()) return emit_report(out, run_verify(open_scene(flags), which, opts));
        for (const auto& [sub, suite] : aliases)
            if (sub->parsed()) return emit_report(out, run_verify(open_scene(flags), suite, opts));
        if (query_cmd->parsed()) return run_query(query, flags, out);
        if (pvalue_cmd->parsed()) {
            query.kind = "p-value";
            return run_query(query, flags, out);
        }
        if (probe_cmd->parsed()) {
            query.kind = "affinity-probe";
            return run_query(query, flags, out);
        }
        if (spin_verify->parsed()) {
            if (dim == 0) throw InputError("--dim must be at least 1");
            return emit_report(out, run_spin_verify(dim, pairs, flags.tol, flags.seed));
        }
        if (spin_probe->parsed()) {
            if (dim == 0) throw InputError("--dim must be at least 1");
            const Eigen::VectorXd psi = parse_coords(psi_text);
            if (static_cast<std::size_t>(psi.size()) != dim)
                throw DimensionMismatch("--psi has " + std::to_string(psi.size()) + " coordinates, --dim is " +
                                        std::to_string(dim));
            const auto family = family_text.empty() ? spin::standard_family(dim) : parse_family(family_text, dim);
            Report r = run_spin_probe(psi, family, flags.tol);
            r.seed = flags.seed;
            return emit_report(out, r);
        }
    } catch (const std::exception& e) {
        err << "conegauge: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace conegauge::cli
