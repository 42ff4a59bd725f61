#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qct/monomial.hpp"
#include "qct/qrat.hpp"

namespace qct {

/* Thrown when a term budget set by BudgetScope is exhausted.  Budgeted runs
 * abort with this status; they never return a truncated answer. */
struct BudgetExceeded {
    size_t limit;
};

/* Thread-local cap on the number of live terms produced by polynomial
 * multiplication.  Zero means unlimited. */
class BudgetScope {
public:
    explicit BudgetScope(size_t max_terms);
    ~BudgetScope();
    BudgetScope(const BudgetScope&) = delete;
    BudgetScope& operator=(const BudgetScope&) = delete;

private:
    size_t saved_;
};

size_t current_budget();

/* Sparse Laurent polynomial in the z-variables and free letters, with
 * coefficients in Q(q).  Keys are q-free monomials; the q-power of any
 * monomial passed in is folded into the coefficient. */
class MultiLaurent {
public:
    using TermMap = std::map<Monomial, QRat, MonomialLess>;

    MultiLaurent() = default;  // zero
    explicit MultiLaurent(long c) { add_term(Monomial(), QRat(c)); }
    explicit MultiLaurent(const QRat& c) { add_term(Monomial(), c); }
    static MultiLaurent term(const QRat& c, const Monomial& m) {
        MultiLaurent p;
        p.add_term(m, c);
        return p;
    }
    static MultiLaurent var(VarId v, int64_t e = 1) {
        return term(QRat(1L), Monomial::var(v, e));
    }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /* folds m's q-power into c; drops zero coefficients */
    void add_term(const Monomial& m, const QRat& c);

    MultiLaurent operator-() const;
    MultiLaurent operator+(const MultiLaurent& o) const;
    MultiLaurent operator-(const MultiLaurent& o) const;
    MultiLaurent operator*(const MultiLaurent& o) const;
    MultiLaurent& operator+=(const MultiLaurent& o);
    MultiLaurent& operator-=(const MultiLaurent& o);
    MultiLaurent& operator*=(const MultiLaurent& o) { return *this = *this * o; }
    MultiLaurent scaled(const QRat& c) const;
    MultiLaurent mono_mul(const Monomial& m) const;
    MultiLaurent pow(uint64_t n) const;

    bool operator==(const MultiLaurent& o) const { return terms_ == o.terms_; }
    bool operator!=(const MultiLaurent& o) const { return !(*this == o); }

    /* all variables that occur in some term, sorted by var_less */
    std::vector<VarId> vars() const;
    bool depends_on(VarId v) const;
    /* degree bounds of v over all terms; nullopt when the poly is zero */
    std::optional<int64_t> min_exponent(VarId v) const;
    std::optional<int64_t> max_exponent(VarId v) const;

    /* coefficient extraction: terms whose v-exponent is exactly e, with v
     * removed */
    MultiLaurent coefficient_of(VarId v, int64_t e) const;
    /* simultaneous version over a set of (var, exponent) constraints */
    MultiLaurent coefficient_of(const std::vector<std::pair<VarId, int64_t>>& expo) const;

    /* v := c * m.  Requires c != 0 or v never to occur with a negative
     * exponent. */
    MultiLaurent substitute(VarId v, const QRat& c, const Monomial& m) const;

    std::string to_string() const;  // canonical, parseable by the DSL

private:
    TermMap terms_;
};

/* prod_{t=0}^{n-1} (1 - q^t * c * m); n >= 0 */
MultiLaurent pochhammer(const QRat& c, const Monomial& m, int n);
inline MultiLaurent pochhammer(const Monomial& m, int n) {
    return pochhammer(QRat(1L), m, n);
}

inline MultiLaurent ml_mul(const MultiLaurent& a, const MultiLaurent& b) {
    return a * b;
}

/* exact quotient p/d in the Laurent ring; nullopt when d does not divide p */
std::optional<MultiLaurent> ml_exact_div(const MultiLaurent& p, const MultiLaurent& d);

}  // namespace qct
