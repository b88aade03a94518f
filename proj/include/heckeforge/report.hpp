#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace heckeforge {

/// One relation family checked by a verifier. The witness is null on pass
/// and holds the offending difference (element or matrix JSON) on failure.
struct CheckEntry {
    std::string relation;
    bool pass = false;
    nlohmann::json witness = nullptr;
    nlohmann::json detail = nullptr;  // extra per-relation data, e.g. side vanishing
};

struct VerificationReport {
    std::string subject;
    nlohmann::json params = nlohmann::json::object();
    std::vector<CheckEntry> entries;

    void add_pass(const std::string& relation) { entries.push_back({relation, true, nullptr, nullptr}); }

    void add(const std::string& relation, bool pass, nlohmann::json witness = nullptr,
             nlohmann::json detail = nullptr) {
        entries.push_back({relation, pass, std::move(witness), std::move(detail)});
    }

    bool all_pass() const {
        for (const auto& e : entries)
            if (!e.pass) return false;
        return true;
    }

    std::size_t failure_count() const {
        std::size_t n = 0;
        for (const auto& e : entries)
            if (!e.pass) ++n;
        return n;
    }

    nlohmann::json to_json() const {
        nlohmann::json checks = nlohmann::json::array();
        for (const auto& e : entries) {
            nlohmann::json c{{"relation", e.relation},
                             {"status", e.pass ? "pass" : "fail"},
                             {"witness", e.witness}};
            if (!e.detail.is_null()) c["detail"] = e.detail;
            checks.push_back(std::move(c));
        }
        return nlohmann::json{{"subject", subject},
                              {"params", params},
                              {"pass", all_pass()},
                              {"checks", std::move(checks)}};
    }
};

}  // namespace heckeforge
