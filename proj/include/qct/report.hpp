#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qct {

enum class Status {
    Pass,
    Fail,
    NoClaim,         // hypothesis not satisfied; nothing asserted
    BudgetExceeded,  // aborted by term budget; no answer produced
    Error,           // unexpected failure (exception text in detail)
};

std::string status_name(Status s);

/* Outcome of one identity check at one parameter point. */
struct VerifyReport {
    std::string identity;
    /* parameter point, in emission order */
    std::vector<std::pair<std::string, std::string>> params;
    Status status = Status::Pass;
    std::string detail;       // failure diagnostics / sub-check summary
    std::string lhs, rhs;     // canonical forms, filled on failure
    int64_t millis = 0;

    bool pass() const { return status == Status::Pass || status == Status::NoClaim; }

    void set_param(const std::string& key, const std::string& value) {
        params.emplace_back(key, value);
    }
    void set_param(const std::string& key, int64_t value) {
        params.emplace_back(key, std::to_string(value));
    }

    std::string to_json_line() const;
};

}  // namespace qct
