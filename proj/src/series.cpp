#include "qct/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace qct {

std::string GeomFactor::to_string() const {
    Monomial m = Monomial::q(qshift) * Monomial::var(num_var) *
                 Monomial::var(den_var, -1);
    return "1/(1 - " + m.to_string() + ")";
}

bool geom_factor_less(const GeomFactor& a, const GeomFactor& b) {
    if (!(a.num_var == b.num_var)) return var_less(a.num_var, b.num_var);
    if (!(a.den_var == b.den_var)) return var_less(a.den_var, b.den_var);
    return a.qshift < b.qshift;
}

bool SeriesExpr::equivalent(const SeriesExpr& o) const {
    if (numerator != o.numerator) return false;
    auto a = factors, b = o.factors;
    std::sort(a.begin(), a.end(), geom_factor_less);
    std::sort(b.begin(), b.end(), geom_factor_less);
    return a == b;
}

void check_smallness(const SeriesExpr& e) {
    for (const GeomFactor& f : e.factors) {
        if (f.num_var == f.den_var)
            throw std::invalid_argument("smallness violation: " + f.to_string() +
                                        " has equal numerator and denominator variables");
        if (f.den_var.level != kFreeLevel && f.num_var.level >= f.den_var.level)
            throw std::invalid_argument(
                "smallness violation: " + f.to_string() +
                " is not oriented small (its numerator variable's level must lie "
                "below its denominator variable's level)");
        if (f.num_var.level == kFreeLevel)
            throw std::invalid_argument("smallness violation: " + f.to_string() +
                                        " has a free letter as numerator variable");
    }
}

}  // namespace qct
