#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace turansw {

// Machine-readable pass/fail record printed by the CLI verification commands.
struct VerificationReport {
    struct Check {
        std::string name;
        std::string expected;
        std::string actual;
        bool pass = false;
    };

    std::string command;
    std::map<std::string, std::string> inputs;
    std::vector<Check> checks;
    double runtime_ms = 0.0;

    void expect_eq(const std::string& name, const std::string& expected, const std::string& actual);
    void expect_true(const std::string& name, bool condition);
    void note(const std::string& name, const std::string& value);  // informational, always passes

    bool overall_pass() const;
    nlohmann::json to_json(bool include_runtime) const;
    std::string to_text(bool include_runtime) const;
};

}  // namespace turansw
