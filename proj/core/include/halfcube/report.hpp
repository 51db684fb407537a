#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace halfcube {

struct Check {
    std::string name;
    bool passed = false;
    nlohmann::json detail = nlohmann::json::object();
};

/// Ordered list of named pass/fail checks with JSON payloads.
class Report {
public:
    Report() = default;
    explicit Report(std::string suite) : suite_(std::move(suite)) {}

    void add(std::string name, bool passed, nlohmann::json detail = nlohmann::json::object()) {
        checks_.push_back({std::move(name), passed, std::move(detail)});
    }
    void append(const Report& other) {
        for (const auto& c : other.checks_) {
            checks_.push_back({other.suite_.empty() ? c.name : other.suite_ + "/" + c.name, c.passed, c.detail});
        }
    }

    const std::string& suite() const { return suite_; }
    const std::vector<Check>& checks() const { return checks_; }

    bool passed() const {
        for (const auto& c : checks_) {
            if (!c.passed) return false;
        }
        return true;
    }
    std::size_t failures() const {
        std::size_t f = 0;
        for (const auto& c : checks_) f += c.passed ? 0 : 1;
        return f;
    }

    nlohmann::json to_json() const {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& c : checks_) {
            list.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        }
        return {{"suite", suite_}, {"passed", passed()}, {"failures", failures()}, {"checks", std::move(list)}};
    }

private:
    std::string suite_;
    std::vector<Check> checks_;
};

}  // namespace halfcube
