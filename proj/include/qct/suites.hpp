#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qct/report.hpp"

namespace qct {

/* inclusive integer interval for one grid parameter */
struct ParamRange {
    int64_t lo = 0;
    int64_t hi = 0;
};

using RangeMap = std::map<std::string, ParamRange>;

struct RunOptions {
    RangeMap overrides;  // replaces the default range of matching parameters
    int jobs = 1;
    size_t budget = 0;  // per-point term budget; 0 = unlimited
    /* called once per grid point, in grid order */
    std::function<void(const VerifyReport&)> sink;
};

struct RunSummary {
    int total = 0;
    int passed = 0;
    int failed = 0;
    int no_claim = 0;
    int budget_exceeded = 0;
    int errors = 0;

    bool all_pass() const { return failed == 0 && errors == 0; }
    /* 0 all pass; 2 aborted points but no failures; 1 otherwise */
    int exit_code() const {
        if (failed > 0 || errors > 0) return 1;
        if (budget_exceeded > 0) return 2;
        return 0;
    }
    void count(const VerifyReport& r);
};

struct IdentityInfo {
    std::string name;
    std::string description;               // self-contained mathematical statement
    std::vector<std::string> param_names;  // overridable grid parameters
};

const std::vector<IdentityInfo>& list_identities();
bool identity_known(const std::string& name);

/* run one identity over its parameter grid; throws std::invalid_argument on
 * unknown names or malformed overrides */
RunSummary run_identity(const std::string& name, const RunOptions& opt);

}  // namespace qct
