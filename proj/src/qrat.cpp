#include "qct/qrat.hpp"

#include <stdexcept>

namespace qct {

QRat::QRat(const QPoly& num) : num_(num) {}

QRat::QRat(const QPoly& num, const QPoly& den) : num_(num), den_(den) { reduce(); }

void QRat::reduce() {
    if (den_.is_zero()) throw std::domain_error("QRat: zero denominator");
    if (num_.is_zero()) {
        den_ = QPoly(1L);
        return;
    }
    if (den_.is_monomial()) {
        /* monomial denominators are units: fold them into the numerator */
        const auto& [e, c] = *den_.terms().begin();
        num_ = num_.scaled(BigRat(1) / c).shifted(-e);
        den_ = QPoly(1L);
        return;
    }
    const int64_t sn = num_.min_exp(), sd = den_.min_exp();
    QPoly n = num_.shifted(-sn), d = den_.shifted(-sd);
    QPoly g = qpoly_gcd(n, d);
    if (!g.is_one()) {
        n = qpoly_exact_div(n, g);
        d = qpoly_exact_div(d, g);
    }
    if (d.is_monomial()) {
        const auto& [e, c] = *d.terms().begin();
        num_ = n.scaled(BigRat(1) / c).shifted(sn - sd - e);
        den_ = QPoly(1L);
        return;
    }
    const BigRat& lead = d.leading_coeff();
    num_ = n.scaled(BigRat(1) / lead).shifted(sn - sd);
    den_ = d.scaled(BigRat(1) / lead);
}

QRat QRat::operator-() const {
    QRat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

QRat QRat::operator+(const QRat& o) const {
    if (den_ == o.den_) {
        QRat r(num_ + o.num_, den_);
        return r;
    }
    return QRat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

QRat QRat::operator-(const QRat& o) const {
    if (den_ == o.den_) return QRat(num_ - o.num_, den_);
    return QRat(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

QRat QRat::operator*(const QRat& o) const {
    if (is_zero() || o.is_zero()) return QRat();
    if (den_.is_one() && o.den_.is_one()) {
        QRat r;
        r.num_ = num_ * o.num_;
        return r;
    }
    return QRat(num_ * o.num_, den_ * o.den_);
}

QRat QRat::operator/(const QRat& o) const {
    if (o.is_zero()) throw std::domain_error("QRat: division by zero");
    return QRat(num_ * o.den_, den_ * o.num_);
}

QRat QRat::inverse() const {
    if (is_zero()) throw std::domain_error("QRat: inverse of zero");
    return QRat(den_, num_);
}

QRat QRat::q_scaled(int64_t r) const {
    QRat out;
    out.num_ = num_.q_scaled(r);
    out.den_ = den_.q_scaled(r);
    out.reduce();
    return out;
}

std::string QRat::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace qct
