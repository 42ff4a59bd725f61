#include "qct/report.hpp"

#include <json.hpp>

namespace qct {

std::string status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::NoClaim: return "no_claim";
        case Status::BudgetExceeded: return "budget_exceeded";
        case Status::Error: return "error";
    }
    return "unknown";
}

std::string VerifyReport::to_json_line() const {
    nlohmann::ordered_json j;
    j["identity"] = identity;
    nlohmann::ordered_json p = nlohmann::ordered_json::object();
    for (const auto& [k, v] : params) {
        /* numeric parameters stay numeric in the report */
        try {
            size_t used = 0;
            long long n = std::stoll(v, &used);
            if (used == v.size()) {
                p[k] = n;
                continue;
            }
        } catch (...) {
        }
        p[k] = v;
    }
    j["params"] = p;
    j["pass"] = pass();
    j["status"] = status_name(status);
    j["millis"] = millis;
    if (!detail.empty()) j["detail"] = detail;
    if (!lhs.empty()) j["lhs"] = lhs;
    if (!rhs.empty()) j["rhs"] = rhs;
    return j.dump();
}

}  // namespace qct
