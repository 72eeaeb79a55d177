#include "conegauge/report.hpp"

#include <algorithm>
#include <charconv>

namespace conegauge {

ReportItem& Report::exact(std::string claim, std::string lhs, std::string relation, std::string rhs, bool holds) {
    ReportItem item;
    item.claim = std::move(claim);
    item.kind = ItemKind::Exact;
    item.lhs = std::move(lhs);
    item.relation = std::move(relation);
    item.rhs = std::move(rhs);
    item.holds = holds;
    items.push_back(std::move(item));
    return items.back();
}

ReportItem& Report::tolerance(std::string claim, double lhs, double rhs, double residual, double tol) {
    ReportItem item;
    item.claim = std::move(claim);
    item.kind = ItemKind::Tolerance;
    item.lhs = format_double(lhs);
    item.relation = "~";
    item.rhs = format_double(rhs);
    item.residual = residual;
    item.holds = residual <= tol;
    item.witness = {{"tol", tol}};
    items.push_back(std::move(item));
    return items.back();
}

ReportItem& Report::measured(std::string claim, std::string value, nlohmann::ordered_json witness) {
    ReportItem item;
    item.claim = std::move(claim);
    item.kind = ItemKind::Measured;
    item.lhs = std::move(value);
    item.relation = "";
    item.witness = std::move(witness);
    items.push_back(std::move(item));
    return items.back();
}

Verdict Report::verdict() const {
    bool measured = false;
    for (const auto& i : items) {
        if (i.kind != ItemKind::Measured && !i.holds) return Verdict::Fail;
        if (i.kind != ItemKind::Exact) measured = true;
    }
    return measured ? Verdict::Measured : Verdict::Pass;
}

bool Report::exact_only() const {
    return std::all_of(items.begin(), items.end(), [](const ReportItem& i) { return i.kind == ItemKind::Exact; });
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Measured: return "measured";
    }
    return "fail";
}

std::string format_double(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return {buf, res.ptr};
}

nlohmann::ordered_json Report::to_json() const {
    nlohmann::ordered_json out;
    out["command"] = command;
    out["verdict"] = to_string(verdict());
    out["seed"] = seed;
    out["exact"] = exact_only();
    std::size_t failures = 0;
    for (const auto& i : items)
        if (i.kind != ItemKind::Measured && !i.holds) ++failures;
    out["summary"] = {{"items", items.size()}, {"failures", failures}};
    auto& arr = out["items"] = nlohmann::ordered_json::array();
    for (const auto& i : items) {
        nlohmann::ordered_json j;
        j["claim"] = i.claim;
        j["kind"] = i.kind == ItemKind::Exact ? "exact" : (i.kind == ItemKind::Tolerance ? "tolerance" : "measured");
        j["lhs"] = i.lhs;
        if (i.kind != ItemKind::Measured) {
            j["relation"] = i.relation;
            j["rhs"] = i.rhs;
            j["holds"] = i.holds;
        }
        if (i.residual) j["residual"] = *i.residual;
        if (!i.witness.is_null()) j["witness"] = i.witness;
        arr.push_back(std::move(j));
    }
    return out;
}

}  // namespace conegauge
