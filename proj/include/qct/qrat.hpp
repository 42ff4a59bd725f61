#pragma once

#include <string>

#include "qct/qpoly.hpp"

namespace qct {

/* Element of the field Q(q), stored fully reduced.
 *
 * Canonical form: gcd(num, den) = 1, den has minimum exponent 0 and leading
 * coefficient 1.  Whole-ring elements therefore have den = 1 exactly, and
 * operator== is structural. */
class QRat {
public:
    QRat() = default;  // zero
    QRat(const QPoly& num);
    QRat(const QPoly& num, const QPoly& den);
    explicit QRat(long n) : QRat(QPoly(n)) {}
    explicit QRat(const BigRat& c) : QRat(QPoly(c)) {}

    static QRat q_power(int64_t e) { return QRat(QPoly::q_power(e)); }

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool has_unit_den() const { return den_.is_one(); }

    QRat operator-() const;
    QRat operator+(const QRat& o) const;
    QRat operator-(const QRat& o) const;
    QRat operator*(const QRat& o) const;
    QRat operator/(const QRat& o) const;  // division by zero is an error
    QRat& operator+=(const QRat& o) { return *this = *this + o; }
    QRat& operator-=(const QRat& o) { return *this = *this - o; }
    QRat& operator*=(const QRat& o) { return *this = *this * o; }
    QRat& operator/=(const QRat& o) { return *this = *this / o; }

    QRat inverse() const;
    /* q -> q^r in both numerator and denominator */
    QRat q_scaled(int64_t r) const;

    bool operator==(const QRat& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const QRat& o) const { return !(*this == o); }
    bool operator<(const QRat& o) const {  // map-key order only
        if (num_ != o.num_) return num_ < o.num_;
        return den_ < o.den_;
    }

    std::string to_string() const;

private:
    void reduce();

    QPoly num_;               // zero value: num = 0
    QPoly den_ = QPoly(1L);   // never zero
};

}  // namespace qct
