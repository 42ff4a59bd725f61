#include "qct/qblocks.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

namespace qct {

namespace {

int64_t now_ms() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

/* stamp millis and derive pass/fail from an equality check */
VerifyReport finish(VerifyReport r, int64_t t0, const MultiLaurent& lhs,
                    const MultiLaurent& rhs) {
    if (lhs != rhs) {
        r.status = Status::Fail;
        r.lhs = lhs.to_string();
        r.rhs = rhs.to_string();
    }
    r.millis = now_ms() - t0;
    return r;
}

}  // namespace

QPoly morris_product(const MorrisParams& p) {
    QPoly num(1L), den(1L);
    for (int i = 0; i < p.k; ++i) {
        num *= q_factorial(p.a + p.b + i * p.c) * q_factorial((i + 1) * p.c);
        den *= q_factorial(p.a + i * p.c) * q_factorial(p.b + i * p.c) *
               q_factorial(p.c);
    }
    return qpoly_exact_div(num, den);
}

std::vector<VarId> level_vars(int32_t level, int count) {
    std::vector<VarId> vs;
    vs.reserve((size_t)count);
    for (int i = 1; i <= count; ++i) vs.push_back(zvar(level, i));
    return vs;
}

MultiLaurent vandermonde_block(const std::vector<VarId>& vars, int c) {
    MultiLaurent out(1L);
    for (size_t i = 0; i < vars.size(); ++i)
        for (size_t j = i + 1; j < vars.size(); ++j) {
            out *= pochhammer(Monomial::var(vars[i]) * Monomial::var(vars[j], -1), c);
            out *= pochhammer(Monomial::q(1) * Monomial::var(vars[j]) *
                              Monomial::var(vars[i], -1), c);
        }
    return out;
}

MultiLaurent morris_rows(VarId top, const std::vector<VarId>& vars, int a, int b) {
    MultiLaurent out(1L);
    for (const VarId& v : vars) {
        out *= pochhammer(Monomial::var(top) * Monomial::var(v, -1), a);
        out *= pochhammer(Monomial::q(1) * Monomial::var(v) *
                          Monomial::var(top, -1), b);
    }
    return out;
}

std::vector<GeomFactor> coupling_factors(const std::vector<VarId>& upper,
                                         const std::vector<VarId>& lower, int c,
                                         int64_t base_shift) {
    std::vector<GeomFactor> fs;
    for (const VarId& u : upper)
        for (const VarId& w : lower)
            for (int m = 0; m < c; ++m)
                fs.push_back(GeomFactor{base_shift + m, u, w});
    return fs;
}

SeriesExpr build_morris_lhs(const MorrisParams& p) {
    std::vector<VarId> zs = level_vars(1, p.k);
    SeriesExpr e;
    e.numerator = morris_rows(z0(), zs, p.a, p.b) * vandermonde_block(zs, p.c);
    return e;
}

SeriesExpr build_L(const LParams& p) {
    std::vector<VarId> z1 = level_vars(1, p.k1);
    SeriesExpr e;
    e.numerator = morris_rows(z0(), z1, p.a, p.b) * vandermonde_block(z1, p.c);
    e.factors = coupling_factors(z1, level_vars(2, p.k2), p.c);
    return e;
}

MultiLaurent eval_L(const LParams& p) {
    return constant_term(build_L(p), level_vars(1, p.k1));
}

MultiLaurent splitting_coefficient(int n, int c, int i, int j) {
    return splitting_coefficient_at(n, c, i, j, 1);
}

VerifyReport verify_splitting(int n, int c) {
    VerifyReport r;
    r.identity = "splitting";
    r.set_param("n", n);
    r.set_param("c", c);
    const int64_t t0 = now_ms();
    if (n < 1 || c < 1) throw std::invalid_argument("verify_splitting: n, c >= 1");

    std::vector<VarId> ys = level_vars(1, n);
    const VarId w = free_var("w");

    /* numerator N(y) of F_n(y,w) */
    MultiLaurent vand = vandermonde_block(ys, c);

    /* route 1: cleared-denominator decomposition identity */
    MultiLaurent rhs;
    std::vector<MultiLaurent> coeffs;  // A_ij in (i,j) order
    for (int i = 1; i <= n; ++i)
        for (int j = 0; j < c; ++j) {
            MultiLaurent rest(1L);
            for (int l = 1; l <= n; ++l)
                for (int u = 0; u < c; ++u) {
                    if (l == i && u == j) continue;
                    MultiLaurent lin(1L);
                    lin.add_term(Monomial::q(u) * Monomial::var(ys[(size_t)l - 1]) *
                                 Monomial::var(w, -1), QRat(-1L));
                    rest *= lin;
                }
            MultiLaurent a = splitting_coefficient(n, c, i, j);
            coeffs.push_back(a);
            rhs += a * rest;
        }
    if (vand != rhs) {
        r.status = Status::Fail;
        r.detail = "cleared-denominator decomposition mismatch";
        return finish(std::move(r), t0, vand, rhs);
    }

    /* route 2: every A_ij against its residue, by exact division */
    size_t idx = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = 0; j < c; ++j, ++idx) {
            MultiLaurent den(1L);
            for (int l = 1; l <= n; ++l)
                for (int u = 0; u < c; ++u) {
                    if (l == i && u == j) continue;
                    MultiLaurent lin(1L);
                    lin.add_term(Monomial::q(u - j) * Monomial::var(ys[(size_t)l - 1]) *
                                 Monomial::var(ys[(size_t)i - 1], -1), QRat(-1L));
                    den *= lin;
                }
            auto residue = ml_exact_div(vand, den);
            if (!residue || *residue != coeffs[idx]) {
                r.status = Status::Fail;
                std::ostringstream os;
                os << "residue oracle mismatch at i=" << i << " j=" << j;
                r.detail = os.str();
                r.lhs = coeffs[idx].to_string();
                r.rhs = residue ? residue->to_string() : "(residue not a Laurent polynomial)";
                r.millis = now_ms() - t0;
                return r;
            }
        }

    std::ostringstream os;
    os << "decomposition and " << coeffs.size() << " residue coefficients agree";
    r.detail = os.str();
    r.millis = now_ms() - t0;
    return r;
}

VerifyReport verify_pochhammer_shift(int i, int j, int t) {
    VerifyReport r;
    r.identity = "poch-shift";
    r.set_param("i", i);
    r.set_param("j", j);
    r.set_param("t", t);
    const int64_t t0 = now_ms();
    if (i < 1 || j < 1)
        throw std::invalid_argument("verify_pochhammer_shift: i, j >= 1");
    if (t < -1 || t > j)
        throw std::invalid_argument("verify_pochhammer_shift: t out of range");

    const Monomial y = Monomial::var(free_var("y"));
    const Monomial yinv = y.inverse();
    std::string checked;

    if (t >= 0) {  // first identity, 0 <= t <= j
        MultiLaurent lhs = pochhammer(yinv, i) * pochhammer(Monomial::q(1) * y, j);
        MultiLaurent rhs = MultiLaurent(QRat::q_power((int64_t)i * t)) *
                           pochhammer(Monomial::q(1 - i) * y, t) *
                           pochhammer(Monomial::q(t + 1) * y, j - t) *
                           pochhammer(Monomial::q(-t) * yinv, i);
        if (lhs != rhs) {
            r.status = Status::Fail;
            r.detail = "first shift identity failed";
            return finish(std::move(r), t0, lhs, rhs);
        }
        checked = "first";
    }
    if (t <= j - 1) {  // second identity, -1 <= t <= j-1
        MultiLaurent lhs = pochhammer(y, j) * pochhammer(Monomial::q(1) * yinv, i);
        MultiLaurent rhs = MultiLaurent(QRat::q_power((int64_t)i * (t + 1))) *
                           pochhammer(Monomial::q(-i) * y, t + 1) *
                           pochhammer(Monomial::q(t + 1) * y, j - t - 1) *
                           pochhammer(Monomial::q(-t) * yinv, i);
        if (lhs != rhs) {
            r.status = Status::Fail;
            r.detail = "second shift identity failed";
            return finish(std::move(r), t0, lhs, rhs);
        }
        checked = checked.empty() ? "second" : "both";
    }
    r.detail = checked + " identity(ies) hold";
    r.millis = now_ms() - t0;
    return r;
}

bool vanishing_hypothesis(int k2, const std::vector<int>& t_vec) {
    long long sum_b = 0;
    std::vector<int> d;
    for (int t : t_vec) {
        if (t <= 0)
            sum_b += t;
        else
            d.push_back(t);
    }
    std::sort(d.begin(), d.end());
    long long s = sum_b;
    const int take = (int)d.size() - k2;
    for (int l = 0; l < take; ++l) s += d[(size_t)l];
    return s > 0;
}

VerifyReport verify_vanishing(int k1, int k2, int c, const std::vector<int>& t_vec) {
    VerifyReport r;
    r.identity = "vanishing";
    r.set_param("k1", k1);
    r.set_param("k2", k2);
    r.set_param("c", c);
    {
        std::ostringstream os;
        for (size_t i = 0; i < t_vec.size(); ++i) os << (i ? "," : "") << t_vec[i];
        r.set_param("t", os.str());
    }
    const int64_t t0 = now_ms();
    if (!(k1 > k2 && k2 >= 0 && c >= 1) || (int)t_vec.size() != k1)
        throw std::invalid_argument("verify_vanishing: need k1 > k2 >= 0, c >= 1, |t| = k1");

    if (!vanishing_hypothesis(k2, t_vec)) {
        r.status = Status::NoClaim;
        r.detail = "hypothesis not satisfied, no claim";
        r.millis = now_ms() - t0;
        return r;
    }

    std::vector<VarId> z1 = level_vars(1, k1);
    SeriesExpr e;
    e.numerator = vandermonde_block(z1, c);
    Monomial tshift;
    for (int u = 0; u < k1; ++u)
        tshift *= Monomial::var(z1[(size_t)u], -t_vec[(size_t)u]);
    e.numerator = e.numerator.mono_mul(tshift);
    e.factors = coupling_factors(z1, level_vars(2, k2), c);

    MultiLaurent ct = constant_term(e, z1);
    if (!ct.is_zero()) {
        r.status = Status::Fail;
        r.detail = "constant term does not vanish";
        r.lhs = ct.to_string();
        r.rhs = "0";
    }
    r.millis = now_ms() - t0;
    return r;
}

VerifyReport verify_L_structure(const LParams& p) {
    VerifyReport r;
    r.identity = "l-structure";
    r.set_param("k1", p.k1);
    r.set_param("k2", p.k2);
    r.set_param("a", p.a);
    r.set_param("b", p.b);
    r.set_param("c", p.c);
    const int64_t t0 = now_ms();
    if (p.k1 < p.k2)
        throw std::invalid_argument("verify_L_structure: k1 >= k2 required");
    const bool factor_claim = (p.b + 1 <= p.c && p.c <= p.a + p.b + 1);

    const MultiLaurent L = eval_L(p);
    const VarId v0 = z0();
    std::vector<VarId> z2 = level_vars(2, p.k2);
    std::ostringstream detail;
    bool ok = true;
    auto sub = [&](const std::string& name, bool good, const std::string& why) {
        detail << (detail.tellp() > 0 ? "; " : "") << name << ":"
               << (good ? "pass" : "FAIL" + (why.empty() ? "" : " (" + why + ")"));
        ok = ok && good;
    };

    /* (i) no negative z0-powers */
    auto lo = L.min_exponent(v0);
    sub("no-negative-z0", !lo || *lo >= 0,
        lo ? "min z0-degree " + std::to_string(*lo) : "");

    /* (ii) z0-degree at most k2*a */
    auto hi = L.max_exponent(v0);
    sub("z0-degree-bound", !hi || *hi <= (int64_t)p.k2 * p.a,
        hi ? "max z0-degree " + std::to_string(*hi) : "");

    /* (iii) vanishing at z0 = q^m z_l^(2), m = 1-a..b+1-c */
    if (factor_claim) {
        bool all = true;
        for (int l = 1; l <= p.k2 && all; ++l)
            for (int m = 1 - p.a; m <= p.b + 1 - p.c && all; ++m) {
                MultiLaurent at = L.substitute(
                    v0, QRat::q_power(m), Monomial::var(z2[(size_t)l - 1]));
                all = at.is_zero();
            }
        sub("root-vanishing", all, "");
    } else {
        sub("root-vanishing", true, "");  // outside the stated hypothesis: vacuous
    }

    /* (iv) [z0^0] L is the closed-form product */
    MultiLaurent center = L.coefficient_of(v0, 0);
    MultiLaurent want(QRat(morris_product({p.k1, p.a, p.b, p.c})));
    sub("z0-constant-coefficient", center == want, "");

    /* (v) the shifted Pochhammer prefactor divides L exactly and the
     * cofactor has z0-degree within k2(c-1-b) */
    if (factor_claim) {
        MultiLaurent pre(1L);
        for (const VarId& v : z2)
            pre *= pochhammer(Monomial::q(p.c - 1 - p.b) * Monomial::var(v0) *
                              Monomial::var(v, -1), p.a + p.b + 1 - p.c);
        auto quo = ml_exact_div(L, pre);
        bool good = quo.has_value();
        std::string why = good ? "" : "prefactor does not divide L";
        if (good && !quo->is_zero()) {
            auto qlo = quo->min_exponent(v0), qhi = quo->max_exponent(v0);
            int64_t cap = (int64_t)p.k2 * (p.c - 1 - p.b);
            if (*qlo < 0 || *qhi > cap) {
                good = false;
                why = "cofactor z0-degrees out of range";
            }
            if (good && quo->coefficient_of(v0, 0) != want) {
                good = false;
                why = "cofactor z0-constant differs from the closed form";
            }
        }
        sub("prefactor-divides", good, why);
    } else {
        sub("prefactor-divides", true, "");
    }

    r.status = ok ? Status::Pass : Status::Fail;
    r.detail = detail.str();
    if (!ok) {
        r.lhs = L.to_string();
        r.rhs = "";
    }
    r.millis = now_ms() - t0;
    return r;
}

}  // namespace qct
