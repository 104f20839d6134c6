#include "turansw/report.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace turansw {

void VerificationReport::expect_eq(const std::string& name, const std::string& expected,
                                   const std::string& actual) {
    checks.push_back({name, expected, actual, expected == actual});
}

void VerificationReport::expect_true(const std::string& name, bool condition) {
    checks.push_back({name, "true", condition ? "true" : "false", condition});
}

void VerificationReport::note(const std::string& name, const std::string& value) {
    checks.push_back({name, value, value, true});
}

bool VerificationReport::overall_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

nlohmann::json VerificationReport::to_json(bool include_runtime) const {
    nlohmann::json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks)
        j["checks"].push_back(
            {{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
    if (include_runtime) j["runtime_ms"] = runtime_ms;
    j["overall_pass"] = overall_pass();
    return j;
}

std::string VerificationReport::to_text(bool include_runtime) const {
    std::ostringstream out;
    out << command;
    for (const auto& [k, v] : inputs) out << " " << k << "=" << v;
    out << "\n";
    for (const auto& c : checks) {
        if (c.expected == c.actual)
            out << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name << ": " << c.actual << "\n";
        else
            out << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name << ": expected "
                << c.expected << ", got " << c.actual << "\n";
    }
    if (include_runtime) out << "  runtime_ms: " << runtime_ms << "\n";
    out << (overall_pass() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

}  // namespace turansw
