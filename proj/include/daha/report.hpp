#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace daha {

struct CaseResult {
    std::string name;
    bool pass = false;
    std::string witness;  // empty on pass
};

struct Suite {
    std::string name;
    std::vector<CaseResult> cases;

    void check(const std::string& cname, bool ok, const std::string& witness = "") {
        cases.push_back({cname, ok, ok ? "" : witness});
    }
    int passes() const {
        int p = 0;
        for (const auto& c : cases) p += c.pass ? 1 : 0;
        return p;
    }
    bool all_pass() const { return passes() == static_cast<int>(cases.size()); }
};

struct Report {
    nlohmann::json config = nlohmann::json::object();
    std::vector<Suite> suites;
    // timings are excluded from the canonical byte stream unless explicitly
    // requested: re-runs with equal config and seed must be byte-identical
    nlohmann::json timings = nlohmann::json::object();
    bool include_timings = false;

    Suite& suite(const std::string& name) {
        suites.push_back(Suite{name, {}});
        return suites.back();
    }
    void merge(const Report& other) {
        for (const auto& s : other.suites) suites.push_back(s);
    }
    bool all_pass() const {
        for (const auto& s : suites)
            if (!s.all_pass()) return false;
        return true;
    }
    int total_cases() const {
        int c = 0;
        for (const auto& s : suites) c += static_cast<int>(s.cases.size());
        return c;
    }

    nlohmann::json to_json() const;
    std::string emit_json() const;           // sorted keys, byte-stable
    std::string emit_csv() const;            // per-case rows
};

std::string library_version();

} // namespace daha
