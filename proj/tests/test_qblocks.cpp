#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qct/qblocks.hpp"

using namespace qct;

namespace {

QPoly from_coeffs(std::initializer_list<std::pair<int64_t, long>> cs) {
    QPoly p;
    for (const auto& [e, c] : cs) p += QPoly::monomial(BigRat(c), e);
    return p;
}

}  // namespace

TEST_CASE("closed product values") {
    CHECK(morris_product({0, 5, 5, 2}).is_one());
    CHECK(morris_product({1, 1, 1, 1}) == from_coeffs({{0, 1}, {1, 1}}));
    CHECK(morris_product({1, 2, 1, 1}) == from_coeffs({{0, 1}, {1, 1}, {2, 1}}));
    CHECK(morris_product({2, 2, 1, 1}) ==
          from_coeffs({{0, 1}, {1, 2}, {2, 3}, {3, 3}, {4, 2}, {5, 1}}));
    /* c = 0 decouples the variables into independent binomial factors */
    CHECK(morris_product({2, 1, 1, 0}) == q_binomial(2, 1) * q_binomial(2, 1));
    /* a = b = 0 rows vanish, leaving the pure pairwise product */
    CHECK(morris_product({2, 0, 0, 1}) ==
          qpoly_exact_div(q_factorial(2), q_factorial(1) * q_factorial(1)));
}

TEST_CASE("kernel builders") {
    const std::vector<VarId> z = level_vars(1, 2);
    REQUIRE(z.size() == 2);
    CHECK(z[0] == zvar(1, 1));

    CHECK(morris_rows(z0(), z, 1, 0) ==
          pochhammer(Monomial::var(z0()) * Monomial::var(z[0], -1), 1) *
              pochhammer(Monomial::var(z0()) * Monomial::var(z[1], -1), 1));
    CHECK(morris_rows(z0(), z, 0, 0) == MultiLaurent(1L));

    CHECK(vandermonde_block(z, 1) ==
          pochhammer(Monomial::var(z[0]) * Monomial::var(z[1], -1), 1) *
              pochhammer(QRat::q_power(1),
                         Monomial::var(z[1]) * Monomial::var(z[0], -1), 1));
    CHECK(vandermonde_block(z, 0) == MultiLaurent(1L));

    const std::vector<GeomFactor> cf =
        coupling_factors(z, level_vars(2, 2), 2, -1);
    CHECK(cf.size() == 8);  // c shifts x 2 upper x 2 lower
    int64_t lo = 100, hi = -100;
    for (const GeomFactor& f : cf) {
        lo = std::min(lo, f.qshift);
        hi = std::max(hi, f.qshift);
        CHECK(f.num_var.level == 1);
        CHECK(f.den_var.level == 2);
    }
    CHECK(lo == -1);
    CHECK(hi == 0);
}

TEST_CASE("coupled constant term, smallest case") {
    /* CT_{z^(1)} (z0/z^(1))_1 / (1 - z^(1)/z^(2)) = 1 - z0/z^(2) */
    const MultiLaurent L = eval_L({1, 1, 1, 0, 1});
    const MultiLaurent expected =
        MultiLaurent(1L) -
        MultiLaurent::var(z0()) * MultiLaurent::var(zvar(2, 1), -1);
    CHECK(L == expected);
}

TEST_CASE("partial-fraction decomposition verifies") {
    for (int n = 1; n <= 3; ++n)
        for (int c = 1; c <= 2; ++c) {
            const VerifyReport r = verify_splitting(n, c);
            CHECK(r.status == Status::Pass);
        }
}

TEST_CASE("index-shift identities") {
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            for (int t = -1; t <= j; ++t) {
                const VerifyReport r = verify_pochhammer_shift(i, j, t);
                CHECK(r.status == Status::Pass);
                if (t == -1) CHECK(r.detail.find("second") != std::string::npos);
                if (t == j) CHECK(r.detail.find("first") != std::string::npos);
            }
    CHECK_THROWS_AS(verify_pochhammer_shift(1, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(verify_pochhammer_shift(1, 2, -2), std::invalid_argument);
}

TEST_CASE("vanishing hypothesis bookkeeping") {
    /* sum of nonpositives plus the k2-censored positives must be positive */
    CHECK(vanishing_hypothesis(1, {1, 1}));        // 0 + (first 1 of {1,1}) = 1
    CHECK(!vanishing_hypothesis(1, {-1, 2}));      // -1 + (first 0 of {2}) = -1
    CHECK(vanishing_hypothesis(0, {-1, 2}));       // -1 + 2 = 1
    CHECK(!vanishing_hypothesis(2, {1, 1}));       // positives all censored
    CHECK(!vanishing_hypothesis(1, {-1, 1, 3}));   // -1 + 1 = 0 is not enough
    CHECK(vanishing_hypothesis(1, {-1, 2, 3}));    // -1 + 2 = 1
    CHECK(!vanishing_hypothesis(3, {1, 2, 3}));    // positives all censored

    const VerifyReport claim = verify_vanishing(2, 1, 1, {1, 1});
    CHECK(claim.status == Status::Pass);
    const VerifyReport off = verify_vanishing(2, 1, 1, {-1, 2});
    CHECK(off.status == Status::NoClaim);
}

TEST_CASE("structural facts about the coupled kernel") {
    const VerifyReport r = verify_L_structure({2, 1, 1, 0, 1});
    CHECK(r.status == Status::Pass);
    for (const char* name :
         {"no-negative-z0", "z0-degree-bound", "root-vanishing",
          "z0-constant-coefficient", "prefactor-divides"})
        CHECK(r.detail.find(name) != std::string::npos);

    /* outside b+1 <= c <= a+b+1 the factor claims are silent, the rest hold */
    const VerifyReport partial = verify_L_structure({2, 1, 0, 2, 1});
    CHECK(partial.status == Status::Pass);
}

TEST_CASE("degree bound and constant coefficient are sharp") {
    const LParams p{2, 2, 2, 1, 2};
    const MultiLaurent L = eval_L(p);
    CHECK(L.max_exponent(z0()) == p.k2 * p.a);
    CHECK(L.min_exponent(z0()) == 0);
    CHECK(L.coefficient_of(z0(), 0) ==
          MultiLaurent(QRat(morris_product({p.k1, p.a, p.b, p.c}))));
}
