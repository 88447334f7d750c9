#pragma once

#include <json.hpp>

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace leibrack {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::vector<std::string> witnesses;
    std::optional<double> residual;

    friend bool operator==(const CheckResult& a, const CheckResult& b) {
        return a.name == b.name && a.pass == b.pass && a.witnesses == b.witnesses &&
               a.residual == b.residual;
    }
};

/// Uniform result envelope for CLI commands: verdict is pass iff every check
/// passes; ordering is deterministic (insertion order).
struct Report {
    std::string subject;
    std::vector<CheckResult> checks;

    bool pass() const;
    void add(std::string name, bool pass, std::vector<std::string> witnesses = {},
             std::optional<double> residual = std::nullopt);

    friend bool operator==(const Report& a, const Report& b) {
        return a.subject == b.subject && a.checks == b.checks;
    }
};

nlohmann::json report_to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);
void print_report(const Report& r, std::ostream& out, bool as_json);

}  // namespace leibrack
