#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qct/qrat.hpp"

using namespace qct;

namespace {

QPoly from_coeffs(std::initializer_list<std::pair<int64_t, long>> cs) {
    QPoly p;
    for (const auto& [e, c] : cs) p += QPoly::monomial(BigRat(c), e);
    return p;
}

/* deterministic small nonzero polynomial with exponents in [lo, hi] */
QPoly random_poly(std::mt19937& rng, int64_t lo, int64_t hi) {
    QPoly p;
    do {
        const int nterms = 1 + (int)(rng() % 4);
        for (int i = 0; i < nterms; ++i) {
            long c = (long)(rng() % 9) - 4;
            if (c == 0) c = 1;
            p += QPoly::monomial(BigRat(c),
                                 lo + (int64_t)(rng() % (uint64_t)(hi - lo + 1)));
        }
    } while (p.is_zero());
    return p;
}

}  // namespace

TEST_CASE("gaussian binomials") {
    CHECK(q_binomial(4, 2) ==
          from_coeffs({{0, 1}, {1, 1}, {2, 2}, {3, 1}, {4, 1}}));
    CHECK(q_binomial(2, 3).is_zero());
    CHECK(q_binomial(3, 0).is_one());
    CHECK(q_binomial(3, 3).is_one());
    CHECK(q_binomial(5, -1).is_zero());
    /* symmetry and the Pascal recurrence */
    for (int n = 0; n <= 6; ++n)
        for (int t = 0; t <= n; ++t) {
            CHECK(q_binomial(n, t) == q_binomial(n, n - t));
            if (n > 0 && t > 0)
                CHECK(q_binomial(n, t) ==
                      q_binomial(n - 1, t) +
                          q_binomial(n - 1, t - 1).shifted(n - t));
        }
}

TEST_CASE("factorials and scalar pochhammers") {
    CHECK(q_factorial(0).is_one());
    CHECK(q_factorial(3) ==
          (QPoly(1L) - QPoly::q_power(1)) * (QPoly(1L) - QPoly::q_power(2)) *
              (QPoly(1L) - QPoly::q_power(3)));
    CHECK(q_pochhammer_scalar(1, 3) == q_factorial(3));
    CHECK(q_pochhammer_scalar(2, 2) ==
          (QPoly(1L) - QPoly::q_power(2)) * (QPoly(1L) - QPoly::q_power(3)));
    CHECK(q_pochhammer_scalar(-1, 1) == QPoly(1L) - QPoly::q_power(-1));
    CHECK(q_pochhammer_scalar(5, 0).is_one());
}

TEST_CASE("polynomial division and gcd") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 60; ++trial) {
        const QPoly d = random_poly(rng, -3, 3);
        const QPoly k = random_poly(rng, -2, 4);
        const QPoly r0 = random_poly(rng, 0, 1);
        const QPoly p = d * k + r0;
        const auto [quot, rem] = qpoly_divrem(p, d);
        CHECK(quot * d + rem == p);
        CHECK(qpoly_exact_div(d * k, d) == k);
    }
    CHECK_THROWS_AS(qpoly_exact_div(QPoly(1L) + QPoly::q_power(1),
                                    QPoly(1L) - QPoly::q_power(1)),
                    std::domain_error);

    const QPoly g = (QPoly(1L) - QPoly::q_power(1)) * (QPoly(1L) - QPoly::q_power(2));
    const QPoly a = g * (QPoly(1L) + QPoly::q_power(1));
    const QPoly b = g * (QPoly(1L) + QPoly::q_power(1) + QPoly::q_power(2));
    CHECK(qpoly_gcd(a, b) == g);
    CHECK(qpoly_gcd(QPoly(), QPoly()).is_zero());
    /* q-powers are units: they never enter the gcd */
    CHECK(qpoly_gcd(QPoly::q_power(5), QPoly::q_power(3)).is_one());
}

TEST_CASE("field elements stay reduced") {
    const QPoly one_minus_q = QPoly(1L) - QPoly::q_power(1);
    const QPoly one_minus_q2 = QPoly(1L) - QPoly::q_power(2);

    const QRat r(one_minus_q2, one_minus_q);
    CHECK(r == QRat(QPoly(1L) + QPoly::q_power(1)));
    CHECK(r.has_unit_den());

    /* unit denominators fold away completely */
    const QRat s(QPoly(1L), QPoly::q_power(2) - QPoly::q_power(3));
    CHECK(s.den().min_exp() == 0);
    CHECK(s.den().leading_coeff() == BigRat(1));
    CHECK(s * QRat(QPoly::q_power(2) - QPoly::q_power(3)) == QRat(1L));

    CHECK(QRat::q_power(-2) * QRat::q_power(2) == QRat(1L));
    CHECK(QRat(QPoly::q_power(2) - QPoly::q_power(1), one_minus_q) ==
          -QRat::q_power(1));

    /* structural equality is canonical-form equality */
    const QRat x(QPoly(2L), one_minus_q);
    const QRat y(QPoly(4L), (QPoly(1L) - QPoly::q_power(1)) * QPoly(2L));
    CHECK(x == y);
}

TEST_CASE("field arithmetic") {
    const QRat half(QPoly(1L), QPoly(2L));
    CHECK(half + half == QRat(1L));
    CHECK(half * QRat(2L) == QRat(1L));
    CHECK(QRat(3L) / QRat(3L) == QRat(1L));
    CHECK((QRat(1L) - QRat(1L)).is_zero());

    const QRat geo(QPoly(1L), QPoly(1L) - QPoly::q_power(1));
    CHECK(geo - geo == QRat());
    CHECK(geo.inverse() == QRat(QPoly(1L) - QPoly::q_power(1)));
    CHECK(geo * QRat(QPoly(1L) - QPoly::q_power(2)) ==
          QRat(QPoly(1L) + QPoly::q_power(1)));

    /* q -> q^r */
    CHECK(QRat(QPoly(1L) + QPoly::q_power(1)).q_scaled(2) ==
          QRat(QPoly(1L) + QPoly::q_power(2)));
    CHECK(geo.q_scaled(3) == QRat(QPoly(1L), QPoly(1L) - QPoly::q_power(3)));
}

TEST_CASE("triangular numbers admit negative arguments") {
    CHECK(choose2(0) == 0);
    CHECK(choose2(1) == 0);
    CHECK(choose2(3) == 3);
    CHECK(choose2(-1) == 1);
    CHECK(choose2(-2) == 3);
}
