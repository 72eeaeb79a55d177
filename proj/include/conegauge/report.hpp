#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace conegauge {

enum class ItemKind {
    Exact,      // rational identity or inequality; a false `holds` fails the report
    Tolerance,  // float comparison against an explicit tolerance
    Measured,   // recorded outcome (expected obstructions, probe residuals)
};

struct ReportItem {
    std::string claim;
    ItemKind kind = ItemKind::Exact;
    std::string lhs;
    std::string relation = "=";
    std::string rhs;
    bool holds = true;
    std::optional<double> residual;
    nlohmann::ordered_json witness;
};

enum class Verdict { Pass, Fail, Measured };

/**
 * Structured outcome of a CLI command.
 *
 * Verdict: fail iff some exact item or tolerance item does not hold;
 * otherwise measured if any float or measured item is present; otherwise pass.
 */
struct Report {
    std::string command;
    std::uint64_t seed = 0;
    std::vector<ReportItem> items;

    ReportItem& exact(std::string claim, std::string lhs, std::string relation, std::string rhs, bool holds);
    ReportItem& tolerance(std::string claim, double lhs, double rhs, double residual, double tol);
    ReportItem& measured(std::string claim, std::string value, nlohmann::ordered_json witness = {});

    [[nodiscard]] Verdict verdict() const;
    [[nodiscard]] bool exact_only() const;
    [[nodiscard]] int exit_code() const { return verdict() == Verdict::Fail ? 1 : 0; }
    [[nodiscard]] nlohmann::ordered_json to_json() const;
};

std::string to_string(Verdict v);

/// Shortest round-trip decimal form of a double, for report strings.
std::string format_double(double x);

}  // namespace conegauge
