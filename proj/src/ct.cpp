#include "qct/ct.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qct {

namespace {

struct VarIdLess {
    bool operator()(const VarId& a, const VarId& b) const { return var_less(a, b); }
};

/* distinct levels of vars, ascending; validates factor coverage */
std::vector<int32_t> elimination_levels(const SeriesExpr& e,
                                        const std::vector<VarId>& vars) {
    check_smallness(e);
    std::vector<int32_t> levels;
    for (const VarId& v : vars) levels.push_back(v.level);
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    auto eliminated = [&](const VarId& v) {
        return std::find(vars.begin(), vars.end(), v) != vars.end();
    };
    for (const GeomFactor& f : e.factors)
        if (!eliminated(f.num_var))
            throw std::invalid_argument(
                "constant term: factor " + f.to_string() +
                " has a numerator variable that is not being eliminated");
    return levels;
}

}  // namespace

std::vector<int64_t> truncation_bounds(const SeriesExpr& e,
                                       const std::vector<VarId>& vars) {
    std::vector<int32_t> levels = elimination_levels(e, vars);
    std::vector<int64_t> caps(e.factors.size(), 0);
    if (e.numerator.is_zero()) return caps;

    std::map<VarId, int64_t, VarIdLess> emin;
    for (const VarId& v : vars) emin[v] = *e.numerator.min_exponent(v);

    for (int32_t level : levels) {
        for (size_t f = 0; f < e.factors.size(); ++f) {
            if (e.factors[f].num_var.level != level) continue;
            caps[f] = std::max<int64_t>(0, -emin[e.factors[f].num_var]);
        }
        /* expanding a level-s factor to order J lowers its den_var by J */
        for (size_t f = 0; f < e.factors.size(); ++f) {
            if (e.factors[f].num_var.level != level) continue;
            auto it = emin.find(e.factors[f].den_var);
            if (it != emin.end()) it->second -= caps[f];
        }
    }
    return caps;
}

MultiLaurent constant_term(const SeriesExpr& e, const std::vector<VarId>& vars) {
    std::vector<int32_t> levels = elimination_levels(e, vars);
    MultiLaurent current = e.numerator;

    for (int32_t level : levels) {
        std::vector<VarId> level_vars;
        for (const VarId& v : vars)
            if (v.level == level) level_vars.push_back(v);
        std::sort(level_vars.begin(), level_vars.end(), var_less);

        for (const VarId& v : level_vars) {
            /* alphabet of this variable's factors */
            std::vector<MultiLaurent> letters;
            for (const GeomFactor& f : e.factors)
                if (f.num_var == v)
                    letters.push_back(MultiLaurent::term(
                        QRat::q_power(f.qshift), Monomial::var(f.den_var, -1)));

            auto lo = current.min_exponent(v);
            if (!lo) return MultiLaurent();  // zero
            int64_t need = *lo < 0 ? -*lo : 0;

            /* penalties[m] = h_m(letters): total contribution of all ways to
             * raise v's exponent by m across its factors */
            std::vector<MultiLaurent> penalties;
            penalties.reserve((size_t)need + 1);
            penalties.emplace_back(1L);
            for (int64_t m = 1; m <= need; ++m) penalties.emplace_back();
            for (const MultiLaurent& x : letters)
                for (int64_t m = 1; m <= need; ++m)
                    penalties[(size_t)m] += x * penalties[(size_t)m - 1];

            MultiLaurent next = current.coefficient_of(v, 0);
            for (int64_t m = 1; m <= need; ++m) {
                MultiLaurent slice = current.coefficient_of(v, -m);
                if (slice.is_zero()) continue;
                if (letters.empty()) continue;  // nothing can raise v: dies
                next += slice * penalties[(size_t)m];
            }
            current = std::move(next);
        }
    }
    return current;
}

MultiLaurent ct_by_expansion(const SeriesExpr& e, const std::vector<VarId>& vars,
                             const std::vector<int64_t>& caps) {
    elimination_levels(e, vars);
    if (caps.size() != e.factors.size())
        throw std::invalid_argument("ct_by_expansion: caps misaligned with factors");

    auto eliminated = [&](const VarId& v) {
        return std::find(vars.begin(), vars.end(), v) != vars.end();
    };

    /* how much each variable's exponent can still move, up (as num_var of
     * unprocessed factors) or down (as den_var) */
    std::map<VarId, int64_t, VarIdLess> raise, lower;
    for (const VarId& v : vars) raise[v] = lower[v] = 0;
    for (size_t f = 0; f < e.factors.size(); ++f) {
        raise[e.factors[f].num_var] += caps[f];
        if (eliminated(e.factors[f].den_var)) lower[e.factors[f].den_var] += caps[f];
    }

    auto prune = [&](const MultiLaurent& p) {
        MultiLaurent out;
        for (const auto& [m, c] : p.terms()) {
            bool dead = false;
            for (const VarId& v : vars) {
                int64_t ex = m.exponent(v);
                if (ex > lower[v] || ex < -raise[v]) {
                    dead = true;
                    break;
                }
            }
            if (!dead) out.add_term(m, c);
        }
        return out;
    };

    MultiLaurent acc = prune(e.numerator);
    for (size_t f = 0; f < e.factors.size(); ++f) {
        const GeomFactor& fac = e.factors[f];
        MultiLaurent expanded;
        Monomial step = Monomial::q(fac.qshift) * Monomial::var(fac.num_var) *
                        Monomial::var(fac.den_var, -1);
        for (int64_t j = 0; j <= caps[f]; ++j)
            expanded.add_term(step.pow(j), QRat(1L));
        raise[fac.num_var] -= caps[f];
        if (eliminated(fac.den_var)) lower[fac.den_var] -= caps[f];
        acc = prune(acc * expanded);
    }

    std::vector<std::pair<VarId, int64_t>> expo;
    for (const VarId& v : vars) expo.emplace_back(v, 0);
    return acc.coefficient_of(expo);
}

MultiLaurent splitting_coefficient_at(int n, int c, int i, int j, int32_t level) {
    if (n < 1 || c < 1 || i < 1 || i > n || j < 0 || j >= c)
        throw std::invalid_argument("splitting_coefficient: index out of range");
    auto y = [&](int l) { return Monomial::var(zvar(level, l)); };
    auto ratio = [&](int lnum, int lden, int64_t qe) {
        return Monomial::q(qe) * y(lnum) * y(lden).inverse();
    };

    QRat pre(QPoly::q_power((int64_t)(n - 1) * j * c + (int64_t)(n - i) * c));
    pre = pre / QRat(q_pochhammer_scalar(-j, j) * q_factorial(c - j - 1));

    MultiLaurent out(pre);
    for (int l = 1; l < i; ++l) {
        out *= pochhammer(ratio(i, l, 1 - c), j);
        out *= pochhammer(ratio(i, l, j + 1), c - j);
    }
    for (int l = i + 1; l <= n; ++l) {
        out *= pochhammer(ratio(i, l, -c), j + 1);
        out *= pochhammer(ratio(i, l, j + 1), c - j - 1);
    }
    for (int u = 1; u <= n; ++u) {
        if (u == i) continue;
        for (int v = u + 1; v <= n; ++v) {
            if (v == i) continue;
            out *= pochhammer(ratio(u, v, 0), c);
            out *= pochhammer(ratio(v, u, 1), c);
        }
    }
    return out;
}

MultiLaurent ct_via_splitting(const SeriesExpr& e, const std::vector<VarId>& yvars) {
    check_smallness(e);
    if (yvars.empty()) throw std::invalid_argument("ct_via_splitting: no variables");
    const int32_t level = yvars[0].level;
    for (const VarId& v : yvars)
        if (v.level != level)
            throw std::invalid_argument("ct_via_splitting: variables span several levels");
    std::vector<VarId> ys = yvars;
    std::sort(ys.begin(), ys.end(), var_less);
    const int n = (int)ys.size();

    if (e.factors.empty())
        throw std::invalid_argument("ct_via_splitting: no denominator factors");
    const VarId w = e.factors[0].den_var;
    if (w.level != kFreeLevel)
        throw std::invalid_argument("ct_via_splitting: den_var must be a free letter");
    if (e.factors.size() % ys.size() != 0)
        throw std::invalid_argument("ct_via_splitting: factors do not split evenly");
    const int c = (int)(e.factors.size() / ys.size());

    /* the factor multiset must be exactly {(u, y_l, w) : 0<=u<c, 1<=l<=n} */
    std::vector<GeomFactor> want, have = e.factors;
    for (const VarId& v : ys)
        for (int u = 0; u < c; ++u) want.push_back(GeomFactor{u, v, w});
    std::sort(want.begin(), want.end(), geom_factor_less);
    std::sort(have.begin(), have.end(), geom_factor_less);
    if (!(want == have))
        throw std::invalid_argument(
            "ct_via_splitting: factors are not a full (y_l/w)_c family");

    /* numerator must carry the Vandermonde-type block */
    MultiLaurent vand(1L);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) {
            vand *= pochhammer(Monomial::var(ys[(size_t)u - 1]) *
                               Monomial::var(ys[(size_t)v - 1]).inverse(), c);
            vand *= pochhammer(Monomial::q(1) * Monomial::var(ys[(size_t)v - 1]) *
                               Monomial::var(ys[(size_t)u - 1]).inverse(), c);
        }
    auto extra = ml_exact_div(e.numerator, vand);
    if (!extra)
        throw std::invalid_argument(
            "ct_via_splitting: numerator is not divisible by the Vandermonde block");

    MultiLaurent result;
    for (int i = 1; i <= n; ++i) {
        const VarId yi = ys[(size_t)i - 1];
        for (int j = 0; j < c; ++j) {
            MultiLaurent part = *extra * splitting_coefficient_at(n, c, i, j, level);
            /* CT over y of part / (1 - q^j y_i/w): term y_i^{-l} (others 0)
             * pairs with the series term (q^j y_i/w)^l */
            for (const auto& [m, coeff] : part.terms()) {
                bool ok = true;
                for (const VarId& v : ys)
                    if (!(v == yi) && m.exponent(v) != 0) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                int64_t l = -m.exponent(yi);
                if (l < 0) continue;
                Monomial rest = m.erased(yi) * Monomial::q(j * l) * Monomial::var(w, -l);
                result.add_term(rest, coeff);
            }
        }
    }
    return result;
}

}  // namespace qct
