#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace thetalift {

// Structured verdict of an identity check. `exact` marks checks carried out
// in rational arithmetic; for those, pass implies every residual is the
// rational zero.
struct RelationReport {
    std::string identity;
    std::string range;
    bool pass = false;
    bool exact = false;
    std::string first_counterexample;  // empty when pass
    std::vector<std::string> notes;
    nlohmann::json residuals = nlohmann::json::array();

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["identity"] = identity;
        j["range"] = range;
        j["status"] = pass ? (exact ? "exact-pass" : "pass") : "fail";
        j["exact"] = exact;
        if (!first_counterexample.empty()) j["first_counterexample"] = first_counterexample;
        if (!notes.empty()) j["notes"] = notes;
        j["residuals"] = residuals;
        return j;
    }
};

}  // namespace thetalift
