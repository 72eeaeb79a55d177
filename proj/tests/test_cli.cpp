#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "conegauge/cli.hpp"

using namespace conegauge;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
    [[nodiscard]] json doc() const { return json::parse(out); }
};

Run invoke(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_scene(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / ("conegauge_test_" + name + ".json");
    std::ofstream(path) << text;
    return path.string();
}

const char* kTriangleCycle = R"({
  "polytopes": { "tri": [["0","0"], ["1","0"], ["0","1"]] },
  "functions": { "f": { "polytope": "tri", "values": ["2","1","4"] },
                 "g": { "polytope": "tri", "values": [1, 1, 1] } },
  "bijections": { "a": { "from": "tri", "to": "tri", "pairs": [[0,1],[1,2],[2,0]] } }
})";

const char* kSquareIdentity = R"({
  "polytopes": { "sq": { "vertices": [["0","0"], ["1","0"], ["0","1"], ["1","1"]] } },
  "bijections": { "id": { "from": "sq", "to": "sq", "pairs": [[0,0],[1,1],[2,2],[3,3]] } }
})";

}  // namespace

TEST_CASE("scene parsing") {
    const Scene s = parse_scene(json::parse(kTriangleCycle));
    CHECK(s.polytopes.size() == 1);
    CHECK(s.function("f").values == RVector{2, 1, 4});
    CHECK(s.function("g").values == RVector{1, 1, 1});
    CHECK(s.bijections.at("a").forward() == Permutation{1, 2, 0});
    CHECK(s.polytope_name(s.polytope("tri")) == "tri");
    CHECK_THROWS_AS((void)s.function("nope"), InputError);

    CHECK_THROWS_AS(parse_scene(json::parse(R"({"polytopes": {"k": [["1/0"]]}})")), InputError);
    CHECK_THROWS_AS(parse_scene(json::parse(R"({"polytopes": {"k": [["0"], ["1/2"], ["1"]]}})")), InputError);
    CHECK_THROWS_AS(parse_scene(json::parse(R"({"functions": {"f": {"polytope": "x", "values": []}}})")), InputError);
    CHECK_THROWS_AS(parse_scene(json::parse(R"({"polytopes": {"sq": [["0","0"],["1","0"],["0","1"],["1","1"]]},
        "functions": {"f": {"polytope": "sq", "values": ["1","2","2","4"]}}})")),
                    InputError);
    CHECK_THROWS_AS(parse_scene(json::parse(R"({"polytopes": {"t": [["0"],["1"]]},
        "bijections": {"b": {"from": "t", "to": "t", "pairs": [[0,0],[1,0]]}}})")),
                    InputError);
    CHECK_THROWS_AS(parse_scene(json::parse("[1,2]")), InputError);
    CHECK(parse_rational(json("2/4")) == Rational(1, 2));
}

TEST_CASE("builtin scene matches the shipped file") {
    const Scene s = builtin_scene();
    CHECK(s.polytopes.size() == 2);
    CHECK(s.function("s").values == RVector{1, 2, 2, 3});
}

TEST_CASE("query examples") {
    const auto scene = write_scene("tri", kTriangleCycle);
    auto r = invoke({"--scene", scene, "query", "gauge-M", "f", "g"});
    CHECK(r.code == 0);
    CHECK(r.out == "4\n");
    r = invoke({"query", "thompson", "f", "f"});
    CHECK(r.out == "1\n");
    r = invoke({"query", "p-value", "--polytope", "square", "--psi", "0", "--point", "1/2,1/2"});
    CHECK(r.code == 0);
    CHECK(r.out == "1/2\n");
    r = invoke({"p-value", "--polytope", "square", "--psi", "0", "--point", "1/2,1/2", "--json"});
    CHECK(r.doc()["value"] == "1/2");
    r = invoke({"query", "gauge-m", "g", "f", "--json"});
    CHECK(r.doc()["value"] == "1/4");
    r = invoke({"affinity-probe", "--polytope", "square", "--psi", "0", "--json"});
    CHECK(r.doc()["result"] == "counterexample");
    CHECK(r.doc()["p_mid"] == "1/2");
}

TEST_CASE("query input errors exit 2") {
    CHECK(invoke({"query", "gauge-M", "f"}).code == 2);
    CHECK(invoke({"query", "gauge-M", "f", "nope"}).code == 2);
    CHECK(invoke({"query", "gauge-M", "f", "s"}).code == 2);
    CHECK(invoke({"query", "p-value", "--polytope", "square", "--psi", "0", "--point", "2,2"}).code == 2);
    CHECK(invoke({"query", "p-value", "--polytope", "square", "--psi", "9", "--point", "0,0"}).code == 2);
    CHECK(invoke({"query", "p-value", "--polytope", "square", "--psi", "0", "--point", "1/0,0"}).code == 2);
    CHECK(invoke({"query", "median", "f", "g"}).code == 2);
    CHECK(invoke({"bogus"}).code == 2);
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"--help"}).code == 0);
    const auto r = invoke({"--scene", "/nonexistent/scene.json", "verify", "all"});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
    CHECK(invoke({"--scene", write_scene("broken", "{ not json"), "verify", "all"}).code == 2);
}

TEST_CASE("verify reversing on triangle and cycle") {
    const auto r = invoke({"--scene", write_scene("tri", kTriangleCycle), "verify", "reversing", "--trials", "20"});
    CHECK(r.code == 0);
    const auto d = r.doc();
    CHECK(d["verdict"] == "pass");
    CHECK(d["exact"] == true);
    CHECK(d["summary"]["failures"] == 0);
    for (const auto& item : d["items"]) CHECK(item["holds"] == true);
}

TEST_CASE("verify reversing on the square reports the obstruction") {
    const auto r = invoke({"--scene", write_scene("sq", kSquareIdentity), "verify-reversing"});
    CHECK(r.code == 0);
    const auto d = r.doc();
    CHECK(d["verdict"] == "measured");
    REQUIRE(d["items"].size() == 1);
    const auto& w = d["items"][0]["witness"];
    CHECK(w["function_values"] == json({"1", "2", "2", "3"}));
    CHECK(w["confirmed"] == true);
}

TEST_CASE("verify involution with a 3-cycle") {
    const auto r = invoke({"--scene", write_scene("tri", kTriangleCycle), "involution"});
    CHECK(r.code == 0);
    const auto d = r.doc();
    bool saw = false;
    for (const auto& item : d["items"]) {
        if (item["claim"] == "involution[a].reversing") {
            CHECK(item["lhs"] == "Phi^2=id:false");
            CHECK(item["rhs"] == "alpha^2=id:false");
            CHECK(item["holds"] == true);
            saw = true;
        }
    }
    CHECK(saw);
}

TEST_CASE("every suite passes on the builtin scene") {
    for (const char* which : {"reversing", "preserving", "involution", "derivative", "atomicity", "gauges", "all"}) {
        const auto r = invoke({"verify", which, "--trials", "15", "--seed", "3"});
        CHECK_MESSAGE(r.code == 0, which);
        CHECK(r.doc()["summary"]["failures"] == 0);
    }
}

TEST_CASE("reports are byte-identical for the same seed") {
    const auto a = invoke({"verify", "all", "--seed", "5"});
    const auto b = invoke({"verify", "all", "--seed", "5"});
    CHECK(a.out == b.out);
    const auto c = invoke({"verify", "all", "--seed", "6"});
    CHECK(a.out != c.out);
}

TEST_CASE("spin commands") {
    auto r = invoke({"spin-verify", "--dim", "2", "--pairs", "100", "--tol", "1e-9"});
    CHECK(r.code == 0);
    CHECK(r.doc()["summary"]["failures"] == 0);
    CHECK(r.doc()["verdict"] == "measured");

    r = invoke({"spin-probe", "--dim", "2", "--psi", "0,1"});
    CHECK(r.code == 0);
    auto d = r.doc();
    CHECK(d["items"][0]["lhs"] == "inconsistent");
    CHECK(std::abs(d["items"][0]["residual"].get<double>() - 0.118) <= 1e-3);

    r = invoke({"spin-probe", "--dim", "1", "--psi", "1"});
    d = r.doc();
    CHECK(d["items"][0]["lhs"] == "consistent");
    CHECK(d["items"][0]["witness"]["w"][0] == 1.0);

    r = invoke({"spin-probe", "--dim", "2", "--psi", "1,0", "--family", "1:0,0"});
    CHECK(r.doc()["items"][0]["lhs"] == "consistent");

    CHECK(invoke({"spin-verify", "--dim", "0"}).code == 2);
    CHECK(invoke({"spin-verify"}).code == 2);
    CHECK(invoke({"spin-probe", "--dim", "2", "--psi", "0,1,0"}).code == 2);
    CHECK(invoke({"spin-probe", "--dim", "2", "--psi", "0,x"}).code == 2);
    CHECK(invoke({"spin-probe", "--dim", "2", "--psi", "0,2"}).code == 2);
    CHECK(invoke({"spin-probe", "--dim", "2", "--psi", "0,1", "--family", "1:3,0"}).code == 2);
}

TEST_CASE("failing exact items give exit 1") {
    Report r;
    r.exact("claim", "1", "=", "2", false).witness = {{"why", "test"}};
    CHECK(r.verdict() == Verdict::Fail);
    CHECK(r.exit_code() == 1);
    CHECK(r.to_json()["summary"]["failures"] == 1);
    Report m;
    m.measured("probe", "value");
    CHECK(m.verdict() == Verdict::Measured);
    CHECK(m.exit_code() == 0);
    Report p;
    p.exact("claim", "1", "=", "1", true);
    CHECK(p.verdict() == Verdict::Pass);
}
