#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qct/multilaurent.hpp"

namespace qct {

/* One series-expandable denominator factor 1/(1 - q^qshift * num_var/den_var),
 * understood under the smallness convention: num_var/den_var is small, i.e.
 * level(num_var) < level(den_var) or den_var is a free letter, so the factor
 * expands as the geometric series sum_j q^{j*qshift} (num_var/den_var)^j. */
struct GeomFactor {
    int64_t qshift = 0;
    VarId num_var;
    VarId den_var;

    bool operator==(const GeomFactor& o) const {
        return qshift == o.qshift && num_var == o.num_var && den_var == o.den_var;
    }
    std::string to_string() const;
};

bool geom_factor_less(const GeomFactor& a, const GeomFactor& b);

/* numerator / prod of geometric factors */
struct SeriesExpr {
    MultiLaurent numerator;
    std::vector<GeomFactor> factors;

    /* multiset equality on factors */
    bool equivalent(const SeriesExpr& o) const;
};

/* throws std::invalid_argument when some factor violates the smallness
 * order (level(num_var) >= level(den_var) and den_var not free) */
void check_smallness(const SeriesExpr& e);

}  // namespace qct
