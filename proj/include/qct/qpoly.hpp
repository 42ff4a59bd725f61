#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "qct/rational.hpp"

namespace qct {

/* Sparse Laurent polynomial in the single variable q over BigRat.
 *
 * Invariant: no stored coefficient is zero.  Exponents may be negative;
 * q-powers are the only units of the ring, which exact division and gcd
 * exploit by shifting to ordinary polynomials first. */
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(const BigRat& c);
    explicit QPoly(long c);

    /* c * q^e */
    static QPoly monomial(const BigRat& c, int64_t e);
    static QPoly q_power(int64_t e) { return monomial(BigRat(1), e); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    bool is_monomial() const { return coeffs_.size() == 1; }
    size_t term_count() const { return coeffs_.size(); }

    /* degree bounds; calling either on zero is a logic error */
    int64_t min_exp() const;
    int64_t max_exp() const;
    const BigRat& leading_coeff() const;  // coefficient of q^max_exp
    BigRat coeff(int64_t e) const;

    QPoly operator-() const;
    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly& operator*=(const QPoly& o);
    bool operator==(const QPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const QPoly& o) const { return !(*this == o); }
    /* arbitrary total order, for use as a map key */
    bool operator<(const QPoly& o) const;

    QPoly scaled(const BigRat& c) const;
    QPoly shifted(int64_t e) const;  // * q^e
    QPoly pow(uint64_t n) const;
    /* q -> q^r on every exponent (plethystic substitution); r >= 1 */
    QPoly q_scaled(int64_t r) const;

    const std::map<int64_t, BigRat>& terms() const { return coeffs_; }
    void set_coeff(int64_t e, const BigRat& c);

    std::string to_string() const;

private:
    std::map<int64_t, BigRat> coeffs_;
};

/* (q)_n = (1-q)(1-q^2)...(1-q^n) */
QPoly q_factorial(int n);

/* (1 - q^e)(1 - q^{e+1})...(1 - q^{e+n-1}); the scalar Pochhammer (q^e)_n */
QPoly q_pochhammer_scalar(int64_t e, int n);

/* Gaussian binomial; zero when t < 0 or t > n */
QPoly q_binomial(int n, int t);

/* quotient and remainder with deg(rem) < deg(d); zero divisor is an error */
std::pair<QPoly, QPoly> qpoly_divrem(const QPoly& p, const QPoly& d);

/* exact quotient; throws std::domain_error listing p, d and the remainder
 * when the division leaves one */
QPoly qpoly_exact_div(const QPoly& p, const QPoly& d);

/* monic gcd (1 for coprime inputs; 0 only when both inputs are 0) */
QPoly qpoly_gcd(const QPoly& a, const QPoly& b);

}  // namespace qct
