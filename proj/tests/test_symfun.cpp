#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qct/symfun.hpp"

using namespace qct;

namespace {

const VarId X = free_var("x");
const VarId Y = free_var("y");

Alphabet xy() {
    return Alphabet::from_vars({X, Y});
}

MultiLaurent lv(VarId v, int64_t e = 1) { return MultiLaurent::var(v, e); }

QRat one_minus_q_pow(int64_t e) {
    return QRat(QPoly(1L) - QPoly::q_power(e));
}

}  // namespace

TEST_CASE("partitions") {
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(0)[0].empty());
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(6).size() == 11);
    for (const Partition& lam : partitions_of(5)) CHECK(lam.size() == 5);

    CHECK(Partition({2, 1}).to_string() == "(2,1)");
    CHECK(Partition().to_string() == "()");
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);

    CHECK(z_lambda(Partition{}) == 1);
    CHECK(z_lambda(Partition{2, 1}) == 2);
    CHECK(z_lambda(Partition{1, 1, 1}) == 6);
    CHECK(z_lambda(Partition{2, 2}) == 8);
    CHECK(z_lambda(Partition{3}) == 3);

    /* sum over lam of n!/z_lam counts permutations by cycle type */
    int64_t total = 0;
    for (const Partition& lam : partitions_of(4)) total += 24 / z_lambda(lam);
    CHECK(total == 24);
}

TEST_CASE("dominance order") {
    CHECK(dominance_leq(Partition{1, 1, 1}, Partition{2, 1}));
    CHECK(dominance_leq(Partition{2, 1}, Partition{3}));
    CHECK(dominance_leq(Partition{2, 2}, Partition{3, 1}));
    CHECK(!dominance_leq(Partition{3}, Partition{1, 1, 1}));
    CHECK(!dominance_leq(Partition{3, 1, 1, 1}, Partition{2, 2, 2}));
    CHECK(!dominance_leq(Partition{2, 2, 2}, Partition{3, 1, 1, 1}));
    CHECK_THROWS_AS(dominance_leq(Partition{2}, Partition{3}),
                    std::invalid_argument);
}

TEST_CASE("moments of finite alphabets") {
    CHECK(p_eval(1, xy()) == lv(X) + lv(Y));
    CHECK(p_eval(3, xy()) == lv(X, 3) + lv(Y, 3));
    CHECK(h_eval(0, xy()) == MultiLaurent(1L));
    CHECK(h_eval(2, xy()) == lv(X, 2) + lv(X) * lv(Y) + lv(Y, 2));
    CHECK(e_eval(1, xy()) == lv(X) + lv(Y));
    CHECK(e_eval(2, xy()) == lv(X) * lv(Y));
    CHECK(e_eval(3, xy()).is_zero());
    CHECK(e_eval(2, Alphabet::single(Monomial::var(X))).is_zero());
}

TEST_CASE("moments of virtual alphabets") {
    /* (q - 1)/(1 - q) is the virtual letter -1 */
    CHECK(p_eval(1, geometric_difference(1, 0, 1)) == MultiLaurent(-1L));
    CHECK(h_eval(1, geometric_difference(2, 0, 1)) ==
          MultiLaurent(QRat(-(QPoly(1L) + QPoly::q_power(1)))));

    /* (1 - q^a)/(1 - q) enumerates the letters 1, q, ..., q^{a-1} */
    const int a = 4;
    Alphabet finite;
    for (int i = 0; i < a; ++i) finite.add_letter(Monomial::q(i));
    const Alphabet geo = geometric_difference(0, a, 1);
    for (int r = 0; r <= 4; ++r) {
        CHECK(p_eval(std::max(r, 1), geo) == p_eval(std::max(r, 1), finite));
        CHECK(h_eval(r, geo) == h_eval(r, finite));
        CHECK(e_eval(r, geo) == e_eval(r, finite));
        /* elementary values over that alphabet are shifted binomials */
        CHECK(e_eval(r, finite) ==
              MultiLaurent(QRat(q_binomial(a, r) * QPoly::q_power(choose2(r)))));
    }
}

TEST_CASE("alphabet algebra clears geometric denominators") {
    const Alphabet A = geometric_difference(2, 0, 1);
    const Alphabet B = geometric_difference(3, 0, 2) + Alphabet::single(Monomial::var(X));
    for (int r = 1; r <= 3; ++r) {
        CHECK(p_eval(r, A + B) == p_eval(r, A) + p_eval(r, B));
        CHECK(p_eval(r, A * B) == p_eval(r, A) * p_eval(r, B));
        CHECK(p_eval(r, A.negated()) == -p_eval(r, A));
        /* the g-transform multiplies moments by (1-q^{cr})/(1-q^r) */
        CHECK(p_eval(r, A.g_transformed(2)) ==
              p_eval(r, A).scaled(one_minus_q_pow(2 * r) / one_minus_q_pow(r)));
    }
}

TEST_CASE("g-family evaluations") {
    /* g_r(A; q, q^c) = h_r[(1-q^c)/(1-q) A]; at c = 1 it is h_r itself */
    for (int r = 0; r <= 3; ++r) CHECK(g_eval(r, xy(), 1) == h_eval(r, xy()));
    const Alphabet sx = Alphabet::single(Monomial::var(X));
    CHECK(g_eval(1, sx, 2) ==
          lv(X).scaled(one_minus_q_pow(2) / one_minus_q_pow(1)));
    /* partition products */
    CHECK(g_eval(Partition{2, 1}, xy(), 2) ==
          g_eval(2, xy(), 2) * g_eval(1, xy(), 2));
    CHECK(h_eval(Partition{}, xy()) == MultiLaurent(1L));
}

TEST_CASE("power sums from the h-determinant") {
    for (int n = 1; n <= 4; ++n) {
        CHECK(p_from_h_determinant(n, xy()) == p_eval(n, xy()));
        CHECK(p_from_h_determinant(n, geometric_difference(2, 0, 2)) ==
              p_eval(n, geometric_difference(2, 0, 2)));
    }
}

TEST_CASE("finite basis expansions") {
    const SymFunc h2 = SymFunc::h(2);
    CHECK(h2.degree() == 2);
    CHECK(h2.coeffs().at(Partition{2}) == QRat(make_rat(1, 2)));
    CHECK(h2.coeffs().at(Partition{1, 1}) == QRat(make_rat(1, 2)));
    const SymFunc e2 = SymFunc::e(2);
    CHECK(e2.coeffs().at(Partition{2}) == QRat(make_rat(-1, 2)));
    CHECK(e2.coeffs().at(Partition{1, 1}) == QRat(make_rat(1, 2)));

    for (int r = 0; r <= 4; ++r) {
        CHECK(SymFunc::h(r).eval(xy(), 1) == h_eval(r, xy()));
        CHECK(SymFunc::e(r).eval(xy(), 1) == e_eval(r, xy()));
    }
    CHECK(SymFunc::g(Partition{2, 1}).eval(xy(), 2) ==
          g_eval(Partition{2, 1}, xy(), 2));

    const SymFunc sum = SymFunc::p(Partition{2}) +
                        SymFunc::p(Partition{1, 1}).scaled(QRat(2L));
    CHECK(sum.eval(xy(), 1) ==
          p_eval(2, xy()) + p_eval(1, xy()).pow(2).scaled(QRat(2L)));
    CHECK(sum.max_support_length() == 2);
    CHECK(sum.to_string() == "(2)*p(1,1) + p(2)");
    CHECK_THROWS_AS(SymFunc::p(Partition{1}) + SymFunc::p(Partition{2}),
                    std::invalid_argument);
}

TEST_CASE("change of basis into the g-family") {
    /* p_1 = (1-q)/(1-q^c) g_1 */
    for (int c = 1; c <= 3; ++c) {
        const auto coeffs = convert_to_g_basis(SymFunc::p(Partition{1}), 1, c);
        REQUIRE(coeffs.size() == 1);
        CHECK(coeffs.at(Partition{1}) ==
              one_minus_q_pow(1) / one_minus_q_pow(c));
    }
    /* conversion preserves values on alphabets */
    const SymFunc f = SymFunc::p(Partition{2, 1}) +
                      SymFunc::p(Partition{1, 1, 1}).scaled(QRat(3L));
    for (int c = 1; c <= 2; ++c) {
        SymFunc g_form;
        bool first = true;
        for (const auto& [mu, coeff] : convert_to_g_basis(f, 3, c)) {
            const SymFunc term = SymFunc::g(mu).scaled(coeff);
            g_form = first ? term : g_form + term;
            first = false;
        }
        CHECK(g_form.eval(xy(), c) == f.eval(xy(), c));
        const Alphabet mixed =
            geometric_difference(2, 0, c) + Alphabet::single(Monomial::var(Y));
        CHECK(g_form.eval(mixed, c) == f.eval(mixed, c));
    }
    /* at c = 1 the g-basis is the h-basis; h_2 converts to g_(2) alone */
    const auto h2g = convert_to_g_basis(SymFunc::h(2), 2, 1);
    REQUIRE(h2g.size() == 1);
    CHECK(h2g.at(Partition{2}) == QRat(1L));
}
