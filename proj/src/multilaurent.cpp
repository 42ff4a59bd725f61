#include "qct/multilaurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qct {

namespace {
thread_local size_t t_budget = 0;

void charge(size_t live_terms) {
    if (t_budget && live_terms > t_budget) throw BudgetExceeded{t_budget};
}
}  // namespace

BudgetScope::BudgetScope(size_t max_terms) : saved_(t_budget) {
    t_budget = max_terms;
}
BudgetScope::~BudgetScope() { t_budget = saved_; }

size_t current_budget() { return t_budget; }

void MultiLaurent::add_term(const Monomial& m, const QRat& c) {
    if (c.is_zero()) return;
    QRat v = c;
    Monomial key = m;
    if (m.qpow() != 0) {
        v *= QRat::q_power(m.qpow());
        key = m.without_q();
    }
    auto [it, fresh] = terms_.try_emplace(key, v);
    if (!fresh) {
        it->second += v;
        if (it->second.is_zero()) terms_.erase(it);
    }
    charge(terms_.size());
}

MultiLaurent MultiLaurent::operator-() const {
    MultiLaurent r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MultiLaurent& MultiLaurent::operator+=(const MultiLaurent& o) {
    for (const auto& [m, c] : o.terms_) {
        auto [it, fresh] = terms_.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    charge(terms_.size());
    return *this;
}

MultiLaurent& MultiLaurent::operator-=(const MultiLaurent& o) {
    for (const auto& [m, c] : o.terms_) {
        auto [it, fresh] = terms_.try_emplace(m, -c);
        if (!fresh) {
            it->second -= c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    charge(terms_.size());
    return *this;
}

MultiLaurent MultiLaurent::operator+(const MultiLaurent& o) const {
    MultiLaurent r = *this;
    r += o;
    return r;
}

MultiLaurent MultiLaurent::operator-(const MultiLaurent& o) const {
    MultiLaurent r = *this;
    r -= o;
    return r;
}

MultiLaurent MultiLaurent::operator*(const MultiLaurent& o) const {
    MultiLaurent r;
    /* iterate the smaller operand outside */
    const MultiLaurent& a = term_count() <= o.term_count() ? *this : o;
    const MultiLaurent& b = term_count() <= o.term_count() ? o : *this;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m = ma * mb;
            QRat c = ca * cb;
            auto [it, fresh] = r.terms_.try_emplace(m, c);
            if (!fresh) {
                it->second += c;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
        charge(r.terms_.size());
    }
    return r;
}

MultiLaurent MultiLaurent::scaled(const QRat& c) const {
    MultiLaurent r;
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

MultiLaurent MultiLaurent::mono_mul(const Monomial& m) const {
    MultiLaurent r;
    const QRat qc = QRat::q_power(m.qpow());
    const Monomial key = m.without_q();
    for (const auto& [m0, c0] : terms_) r.terms_.emplace(m0 * key, c0 * qc);
    return r;
}

MultiLaurent MultiLaurent::pow(uint64_t n) const {
    MultiLaurent r(1L);
    MultiLaurent base = *this;
    while (n) {
        if (n & 1) r *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return r;
}

std::vector<VarId> MultiLaurent::vars() const {
    std::vector<VarId> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.entries()) out.push_back(v);
    std::sort(out.begin(), out.end(), var_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool MultiLaurent::depends_on(VarId v) const {
    for (const auto& [m, c] : terms_)
        if (m.exponent(v) != 0) return true;
    return false;
}

std::optional<int64_t> MultiLaurent::min_exponent(VarId v) const {
    std::optional<int64_t> r;
    for (const auto& [m, c] : terms_) {
        int64_t e = m.exponent(v);
        if (!r || e < *r) r = e;
    }
    return r;
}

std::optional<int64_t> MultiLaurent::max_exponent(VarId v) const {
    std::optional<int64_t> r;
    for (const auto& [m, c] : terms_) {
        int64_t e = m.exponent(v);
        if (!r || e > *r) r = e;
    }
    return r;
}

MultiLaurent MultiLaurent::coefficient_of(VarId v, int64_t e) const {
    MultiLaurent r;
    for (const auto& [m, c] : terms_)
        if (m.exponent(v) == e) r.terms_.emplace(m.erased(v), c);
    return r;
}

MultiLaurent MultiLaurent::coefficient_of(
    const std::vector<std::pair<VarId, int64_t>>& expo) const {
    MultiLaurent r;
    for (const auto& [m, c] : terms_) {
        bool match = true;
        for (const auto& [v, e] : expo)
            if (m.exponent(v) != e) {
                match = false;
                break;
            }
        if (!match) continue;
        Monomial stripped = m;
        for (const auto& [v, e] : expo) stripped = stripped.erased(v);
        r.terms_.emplace(stripped, c);
    }
    return r;
}

MultiLaurent MultiLaurent::substitute(VarId v, const QRat& c, const Monomial& m) const {
    MultiLaurent r;
    for (const auto& [m0, c0] : terms_) {
        int64_t e = m0.exponent(v);
        if (e == 0) {
            r.add_term(m0, c0);
            continue;
        }
        if (c.is_zero()) {
            if (e < 0)
                throw std::domain_error(
                    "substitute: zero value for a variable with negative exponent");
            continue;  // term vanishes
        }
        QRat cc = c0;
        if (e >= 0) {
            for (int64_t t = 0; t < e; ++t) cc *= c;
        } else {
            QRat inv = c.inverse();
            for (int64_t t = 0; t < -e; ++t) cc *= inv;
        }
        r.add_term(m0.erased(v) * m.pow(e), cc);
    }
    return r;
}

std::string MultiLaurent::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (m.is_one()) {
            os << "(" << c.to_string() << ")";
        } else if (c.is_one()) {
            os << m.to_string();
        } else {
            os << "(" << c.to_string() << ")*" << m.to_string();
        }
    }
    return os.str();
}

MultiLaurent pochhammer(const QRat& c, const Monomial& m, int n) {
    if (n < 0) throw std::invalid_argument("pochhammer: negative order");
    MultiLaurent r(1L);
    for (int t = 0; t < n; ++t) {
        MultiLaurent factor(1L);
        factor.add_term(m, -(c * QRat::q_power(t)));
        r *= factor;
    }
    return r;
}

std::optional<MultiLaurent> ml_exact_div(const MultiLaurent& p, const MultiLaurent& d) {
    if (d.is_zero()) throw std::domain_error("ml_exact_div: zero divisor");
    if (p.is_zero()) return MultiLaurent();

    /* normalize away monomial content so that lex long division terminates:
     * with per-variable minimum exponent 0 on both operands, an exact
     * quotient is an ordinary polynomial and every leading term divides */
    auto content = [](const MultiLaurent& f) {
        Monomial shift;
        for (VarId v : f.vars()) shift *= Monomial::var(v, -*f.min_exponent(v));
        return shift;
    };
    const Monomial sp = content(p), sd = content(d);
    MultiLaurent num = p.mono_mul(sp);
    MultiLaurent den = d.mono_mul(sd);

    MultiLaurent quo;
    MultiLaurent rem = num;
    const auto& dlt = *den.terms().rbegin();
    while (!rem.is_zero()) {
        const auto& rlt = *rem.terms().rbegin();
        /* leading-term divisibility in the polynomial sense */
        Monomial ratio = rlt.first * dlt.first.inverse();
        for (const auto& [v, e] : ratio.entries())
            if (e < 0) return std::nullopt;
        QRat c = rlt.second / dlt.second;
        quo.add_term(ratio, c);
        rem -= den.mono_mul(ratio).scaled(c);
    }
    /* undo the content shifts */
    return quo.mono_mul(sp.inverse() * sd);
}

}  // namespace qct
