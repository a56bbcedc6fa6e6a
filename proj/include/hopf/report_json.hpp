#pragma once

// VerifyReport <-> JSON. Counts are decimal strings so that no consumer has to
// trust a double with a 64-bit integer. Field order is fixed.

#include <string>

#include "json.hpp"

#include "hopf/verify.hpp"

namespace hopf {

using Json = nlohmann::ordered_json;

inline Json to_json(const VerifyReport& r) {
    Json j;
    j["family"] = r.family;
    j["n"] = r.n;
    j["p"] = r.p;
    j["strategy"] = r.strategy;
    j["formula_value"] = std::to_string(r.formula_value);
    j["counted_value"] = std::to_string(r.counted_value);
    j["verdict"] = std::string(r.verdict());
    j["elapsed_ms"] = r.elapsed_ms;
    j["breakdown"] = Json::array();
    for (const auto& b : r.breakdown) j["breakdown"].push_back(to_json(b));
    return j;
}

inline VerifyReport report_from_json(const Json& j) {
    VerifyReport r;
    r.family = j.at("family").get<std::string>();
    r.n = j.at("n").get<Int>();
    r.p = j.at("p").get<Int>();
    r.strategy = j.at("strategy").get<std::string>();
    r.formula_value = std::stoll(j.at("formula_value").get<std::string>());
    r.counted_value = std::stoll(j.at("counted_value").get<std::string>());
    r.elapsed_ms = j.at("elapsed_ms").get<double>();
    for (const auto& b : j.at("breakdown")) r.breakdown.push_back(report_from_json(b));
    return r;
}

/// One line of JSON Lines output.
inline std::string to_json_line(const VerifyReport& r) { return to_json(r).dump(); }

}  // namespace hopf
