#include "leibrack/report.hpp"

namespace leibrack {

bool Report::pass() const {
    for (const CheckResult& c : checks) {
        if (!c.pass) return false;
    }
    return true;
}

void Report::add(std::string name, bool pass, std::vector<std::string> witnesses,
                 std::optional<double> residual) {
    checks.push_back({std::move(name), pass, std::move(witnesses), residual});
}

nlohmann::json report_to_json(const Report& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckResult& c : r.checks) {
        nlohmann::json jc{{"name", c.name}, {"pass", c.pass}, {"witnesses", c.witnesses}};
        if (c.residual) {
            jc["residual"] = *c.residual;
        } else {
            jc["residual"] = nullptr;
        }
        checks.push_back(std::move(jc));
    }
    return nlohmann::json{
        {"subject", r.subject}, {"verdict", r.pass() ? "pass" : "fail"}, {"checks", checks}};
}

Report report_from_json(const nlohmann::json& j) {
    Report r;
    r.subject = j.at("subject").get<std::string>();
    for (const nlohmann::json& jc : j.at("checks")) {
        CheckResult c;
        c.name = jc.at("name").get<std::string>();
        c.pass = jc.at("pass").get<bool>();
        c.witnesses = jc.at("witnesses").get<std::vector<std::string>>();
        if (!jc.at("residual").is_null()) c.residual = jc.at("residual").get<double>();
        r.checks.push_back(std::move(c));
    }
    return r;
}

void print_report(const Report& r, std::ostream& out, bool as_json) {
    if (as_json) {
        out << report_to_json(r).dump(2) << "\n";
        return;
    }
    out << "subject: " << r.subject << "\n";
    for (const CheckResult& c : r.checks) {
        out << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name;
        if (c.residual) out << "  (residual " << *c.residual << ")";
        out << "\n";
        for (const std::string& w : c.witnesses) out << "         witness: " << w << "\n";
    }
    out << "verdict: " << (r.pass() ? "pass" : "fail") << "\n";
}

}  // namespace leibrack
