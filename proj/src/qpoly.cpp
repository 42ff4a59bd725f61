#include "qct/qpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace qct {

QPoly::QPoly(const BigRat& c) {
    if (!qct::is_zero(c)) coeffs_.emplace(0, c);
}

QPoly::QPoly(long c) : QPoly(BigRat(c)) {}

QPoly QPoly::monomial(const BigRat& c, int64_t e) {
    QPoly p;
    if (!qct::is_zero(c)) p.coeffs_.emplace(e, c);
    return p;
}

bool QPoly::is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 &&
           coeffs_.begin()->second == 1;
}

int64_t QPoly::min_exp() const {
    if (is_zero()) throw std::logic_error("QPoly::min_exp on zero");
    return coeffs_.begin()->first;
}

int64_t QPoly::max_exp() const {
    if (is_zero()) throw std::logic_error("QPoly::max_exp on zero");
    return coeffs_.rbegin()->first;
}

const BigRat& QPoly::leading_coeff() const {
    if (is_zero()) throw std::logic_error("QPoly::leading_coeff on zero");
    return coeffs_.rbegin()->second;
}

BigRat QPoly::coeff(int64_t e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? BigRat(0) : it->second;
}

void QPoly::set_coeff(int64_t e, const BigRat& c) {
    if (qct::is_zero(c))
        coeffs_.erase(e);
    else
        coeffs_[e] = c;
}

QPoly QPoly::operator-() const {
    QPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e, -c);
    return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
    for (const auto& [e, c] : o.coeffs_) {
        auto [it, fresh] = coeffs_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (qct::is_zero(it->second)) coeffs_.erase(it);
        }
    }
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    for (const auto& [e, c] : o.coeffs_) {
        auto [it, fresh] = coeffs_.try_emplace(e, -c);
        if (!fresh) {
            it->second -= c;
            if (qct::is_zero(it->second)) coeffs_.erase(it);
        }
    }
    return *this;
}

QPoly QPoly::operator+(const QPoly& o) const {
    QPoly r = *this;
    r += o;
    return r;
}

QPoly QPoly::operator-(const QPoly& o) const {
    QPoly r = *this;
    r -= o;
    return r;
}

QPoly QPoly::operator*(const QPoly& o) const {
    QPoly r;
    for (const auto& [e1, c1] : coeffs_)
        for (const auto& [e2, c2] : o.coeffs_) {
            auto [it, fresh] = r.coeffs_.try_emplace(e1 + e2, c1 * c2);
            if (!fresh) {
                it->second += c1 * c2;
                if (qct::is_zero(it->second)) r.coeffs_.erase(it);
            }
        }
    return r;
}

QPoly& QPoly::operator*=(const QPoly& o) { return *this = *this * o; }

bool QPoly::operator<(const QPoly& o) const { return coeffs_ < o.coeffs_; }

QPoly QPoly::scaled(const BigRat& c) const {
    QPoly r;
    if (qct::is_zero(c)) return r;
    for (const auto& [e, v] : coeffs_) r.coeffs_.emplace(e, v * c);
    return r;
}

QPoly QPoly::shifted(int64_t e) const {
    QPoly r;
    for (const auto& [e0, v] : coeffs_) r.coeffs_.emplace(e0 + e, v);
    return r;
}

QPoly QPoly::pow(uint64_t n) const {
    QPoly r(1L);
    QPoly base = *this;
    while (n) {
        if (n & 1) r *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return r;
}

QPoly QPoly::q_scaled(int64_t r) const {
    if (r < 1) throw std::invalid_argument("QPoly::q_scaled: r must be >= 1");
    QPoly out;
    for (const auto& [e, v] : coeffs_) out.coeffs_.emplace(e * r, v);
    return out;
}

std::string QPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        BigRat a = c;
        if (first) {
            if (sgn(a) < 0) {
                os << "-";
                a = -a;
            }
            first = false;
        } else {
            os << (sgn(a) < 0 ? " - " : " + ");
            if (sgn(a) < 0) a = -a;
        }
        if (e == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

QPoly q_factorial(int n) { return q_pochhammer_scalar(1, n); }

QPoly q_pochhammer_scalar(int64_t e, int n) {
    if (n < 0) throw std::invalid_argument("q_pochhammer_scalar: negative order");
    QPoly r(1L);
    for (int t = 0; t < n; ++t) r *= QPoly(1L) - QPoly::q_power(e + t);
    return r;
}

QPoly q_binomial(int n, int t) {
    if (n < 0) throw std::invalid_argument("q_binomial: n must be >= 0");
    if (t < 0 || t > n) return QPoly();
    return qpoly_exact_div(q_pochhammer_scalar(n - t + 1, t), q_factorial(t));
}

std::pair<QPoly, QPoly> qpoly_divrem(const QPoly& p, const QPoly& d) {
    if (d.is_zero()) throw std::domain_error("qpoly_divrem: zero divisor");
    if (p.is_zero()) return {QPoly(), QPoly()};
    /* shift both operands to ordinary polynomials; q-powers are units */
    const int64_t sp = p.min_exp(), sd = d.min_exp();
    QPoly r = p.shifted(-sp);
    const QPoly den = d.shifted(-sd);
    const int64_t dd = den.max_exp();
    const BigRat& lead = den.leading_coeff();
    QPoly quo;
    while (!r.is_zero() && r.max_exp() >= dd) {
        BigRat c = r.leading_coeff() / lead;
        int64_t e = r.max_exp() - dd;
        quo.set_coeff(e, c);
        r -= den.scaled(c).shifted(e);
    }
    return {quo.shifted(sp - sd), r.shifted(sp)};
}

QPoly qpoly_exact_div(const QPoly& p, const QPoly& d) {
    auto [quo, rem] = qpoly_divrem(p, d);
    if (!rem.is_zero())
        throw std::domain_error("qpoly_exact_div: nonzero remainder\n  dividend: " +
                                p.to_string() + "\n  divisor: " + d.to_string() +
                                "\n  remainder: " + rem.to_string());
    return quo;
}

QPoly qpoly_gcd(const QPoly& a, const QPoly& b) {
    QPoly x = a.is_zero() ? QPoly() : a.shifted(-a.min_exp());
    QPoly y = b.is_zero() ? QPoly() : b.shifted(-b.min_exp());
    while (!y.is_zero()) {
        QPoly r = qpoly_divrem(x, y).second;
        if (!r.is_zero()) r = r.shifted(-r.min_exp()).scaled(BigRat(1) / r.leading_coeff());
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    return x.scaled(BigRat(1) / x.leading_coeff());
}

}  // namespace qct
