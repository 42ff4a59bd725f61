#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace qct {

/* Variable identity.
 *
 * level 0 is the single distinguished variable z0; levels 1..n are the
 * indexed families z[s,i] (i >= 1); kFreeLevel holds named free letters
 * (w, x, y, ...) which sort after every z family; kScratchLevel holds
 * anonymous letters used internally (basis conversions) and never printed.
 *
 * The total order on variables is (level, index) except that free letters
 * compare by their registered name, so canonical forms never depend on
 * registration order. */
struct VarId {
    int32_t level = 0;
    int32_t index = 0;

    bool operator==(const VarId& o) const {
        return level == o.level && index == o.index;
    }
    bool operator!=(const VarId& o) const { return !(*this == o); }
};

inline constexpr int32_t kScratchLevel = 1 << 20;
inline constexpr int32_t kFreeLevel = 1 << 21;

VarId z0();
VarId zvar(int32_t level, int32_t index);      // level >= 1
VarId free_var(std::string_view name);         // registers on first use
VarId scratch_var(int32_t index);

bool var_less(const VarId& a, const VarId& b);
std::string var_name(const VarId& v);          // DSL spelling

}  // namespace qct
