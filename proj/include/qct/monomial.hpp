#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qct/var.hpp"

namespace qct {

/* Product of variable powers together with a power of q.
 *
 * Entries are sorted by var_less and carry nonzero exponents.  The q-power
 * is builder convenience: polynomial containers fold it into the
 * coefficient on insertion and key their maps on q-free monomials. */
class Monomial {
public:
    Monomial() = default;
    static Monomial var(VarId v, int64_t e = 1);
    static Monomial q(int64_t e);

    bool is_one() const { return exps_.empty() && qpow_ == 0; }
    bool vars_empty() const { return exps_.empty(); }
    int64_t qpow() const { return qpow_; }
    Monomial without_q() const;

    int64_t exponent(VarId v) const;
    const std::vector<std::pair<VarId, int64_t>>& entries() const { return exps_; }

    Monomial operator*(const Monomial& o) const;
    Monomial& operator*=(const Monomial& o) { return *this = *this * o; }
    Monomial pow(int64_t n) const;  // any integer, including negative
    Monomial inverse() const { return pow(-1); }
    Monomial& shift_q(int64_t e) {
        qpow_ += e;
        return *this;
    }
    /* drop a variable (exponent -> 0) */
    Monomial erased(VarId v) const;

    bool operator==(const Monomial& o) const {
        return qpow_ == o.qpow_ && exps_ == o.exps_;
    }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    std::string to_string() const;  // DSL spelling, e.g. q^2*z0*z[1,2]^-1

private:
    std::vector<std::pair<VarId, int64_t>> exps_;
    int64_t qpow_ = 0;
};

/* Lexicographic on variables in var_less order with missing exponents read
 * as zero; compatible with multiplication, so it serves both as the map
 * order and as the term order of exact multivariate division. */
bool monomial_less(const Monomial& a, const Monomial& b);

struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return monomial_less(a, b);
    }
};

}  // namespace qct
