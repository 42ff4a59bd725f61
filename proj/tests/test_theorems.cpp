#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "qct/suites.hpp"
#include "qct/theorems.hpp"

using namespace qct;

namespace {

Insertion g_ins(const Partition& lam, Alphabet x = Alphabet{}) {
    return Insertion{SymFunc::g(lam), lam, std::move(x), std::nullopt};
}

Alphabet one_letter(const char* name) {
    return Alphabet::single(Monomial::var(free_var(name)));
}

MultiLaurent trailing_rows(int count, int order, bool with_z0) {
    MultiLaurent out(1L);
    for (const VarId& v : level_vars(2, count)) {
        Monomial ratio = Monomial::var(v, -1);
        if (with_z0) ratio = ratio * Monomial::var(z0());
        out *= pochhammer(ratio, order);
    }
    return out;
}

}  // namespace

TEST_CASE("coupled transfer at the boundary exponent") {
    Sides s;
    VerifyReport rep = verify_lemma_bc(2, 1, 1, 1, &s);
    CHECK(rep.status == Status::Pass);
    CHECK(s.lhs == s.rhs);

    /* the closed side is M_2(1,0,1) times one trailing row (z0/z_1^(2))_1 */
    MultiLaurent expected(QRat(morris_product({2, 1, 0, 1})));
    expected *= trailing_rows(1, 1, true);
    CHECK(s.rhs == expected);

    CHECK_THROWS_AS(verify_lemma_bc(1, 2, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(verify_lemma_bc(1, 0, -1, 1), std::invalid_argument);
    CHECK_THROWS_AS(verify_lemma_bc(1, 0, 1, 0), std::invalid_argument);
}

TEST_CASE("single g-row insertion and its plethystic scalar") {
    CHECK(verify_prop_h(2, 1, 1, 1, Partition{1}).status == Status::Pass);
    CHECK(verify_prop_h(2, 0, 1, 2, Partition({2, 1})).status == Status::Pass);

    VerifyReport off = verify_prop_h(1, 1, 1, 1, Partition{1});
    CHECK(off.status == Status::NoClaim);
    CHECK(off.detail.find("shape longer") != std::string::npos);
}

TEST_CASE("general insertions collapse to the bare transfer when empty") {
    Sides with_none, bare;
    CHECK(verify_thm2(2, 1, 1, 2, {}, &with_none).status == Status::Pass);
    CHECK(verify_lemma_bc(2, 1, 1, 2, &bare).status == Status::Pass);
    CHECK(with_none.lhs == bare.lhs);
    CHECK(with_none.rhs == bare.rhs);
}

TEST_CASE("length budget and alphabet restrictions") {
    /* shape length above k1 - k2 means the statement makes no claim */
    VerifyReport over = verify_thm2(1, 1, 1, 1, {g_ins(Partition{1})});
    CHECK(over.status == Status::NoClaim);
    CHECK(over.detail.find("length") != std::string::npos);

    /* translation alphabets must not touch the eliminated family */
    Alphabet bad;
    bad.add_letter(Monomial::var(zvar(1, 1)));
    CHECK_THROWS_AS(verify_thm2(2, 1, 1, 1, {g_ins(Partition{1}, bad)}),
                    std::invalid_argument);
}

TEST_CASE("power-sum variant treats a missing scaling alphabet as the unit") {
    const Partition one{1};
    LevelInsertions implicit{{SymFunc::p(one), one, Alphabet{}, std::nullopt}};
    LevelInsertions explicit_unit{
        {SymFunc::p(one), one, Alphabet{}, Alphabet::single(Monomial())}};

    Sides a, b;
    CHECK(verify_thm3(2, 1, 1, 1, implicit, &a).status == Status::Pass);
    CHECK(verify_thm3(2, 1, 1, 1, explicit_unit, &b).status == Status::Pass);
    CHECK(a.lhs == b.lhs);
    CHECK(a.rhs == b.rhs);

    /* its budget counts sizes, not lengths */
    const Partition two{2};
    VerifyReport over =
        verify_thm3(2, 1, 1, 1, {{SymFunc::h(2), two, Alphabet{}, std::nullopt}});
    CHECK(over.status == Status::NoClaim);
    CHECK(over.detail.find("size") != std::string::npos);
}

TEST_CASE("shifted transfer outside its hypothesis") {
    VerifyReport rep = verify_lemma_bc2(1, 0, 0, 0, 2);
    CHECK(rep.status == Status::NoClaim);
    CHECK(rep.detail.find("hypothesis") != std::string::npos);

    CHECK(verify_lemma_bc2(2, 1, 1, 1, 2).status == Status::Pass);
}

TEST_CASE("iterated identity argument validation") {
    const InsertionSpec none;
    /* k must have n+1 weakly decreasing nonnegative entries */
    CHECK_THROWS_AS(verify_thm_chain({1, {1}, 1, {0}, 1}, none,
                                     ChainVariant::GBasis, ChainNorm::General),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_thm_chain({1, {1, 2}, 1, {0}, 1}, none,
                                     ChainVariant::GBasis, ChainNorm::General),
                    std::invalid_argument);
    /* collapsed normalization pins b_s = c - 1 */
    CHECK_THROWS_AS(verify_thm_chain({1, {1, 0}, 1, {0}, 2}, none,
                                     ChainVariant::GBasis, ChainNorm::Collapsed),
                    std::invalid_argument);
    /* insertions may not outnumber the levels */
    InsertionSpec two_levels;
    two_levels.levels = {{}, {}};
    CHECK_THROWS_AS(verify_thm_chain({1, {1, 0}, 1, {0}, 1}, two_levels,
                                     ChainVariant::GBasis, ChainNorm::General),
                    std::invalid_argument);
}

TEST_CASE("iterated identity staircase hypothesis") {
    VerifyReport rep = verify_thm_chain({1, {1, 0}, 0, {0}, 2}, InsertionSpec{},
                                        ChainVariant::GBasis, ChainNorm::General);
    CHECK(rep.status == Status::NoClaim);
    CHECK(rep.detail.find("staircase") != std::string::npos);

    /* within a level, the shape budget is the drop k_{s-1} - k_s */
    InsertionSpec spec;
    spec.levels = {{g_ins(Partition{1})}};
    VerifyReport over = verify_thm_chain({1, {1, 1}, 1, {0}, 1}, spec,
                                         ChainVariant::GBasis, ChainNorm::General);
    CHECK(over.status == Status::NoClaim);
    CHECK(over.detail.find("level 1") != std::string::npos);
}

TEST_CASE("one-level chain value by hand") {
    /* k = (1,0), a = 1, b = 1, c = 1: the kernel is (1 - 1/z)(1 - qz) z^{-1}
     * and its constant term is -q; the closed side carries the whole value
     * in its prefactor since M_1(1,0,1) = 1 and no trailing rows remain */
    Sides s;
    VerifyReport rep = verify_thm_chain({1, {1, 0}, 1, {1}, 1}, InsertionSpec{},
                                        ChainVariant::GBasis, ChainNorm::General, &s);
    CHECK(rep.status == Status::Pass);
    CHECK(s.rhs == MultiLaurent(-QRat::q_power(1)));
    CHECK(s.lhs == s.rhs);
}

TEST_CASE("one-level chain agrees with the shifted insertion identity") {
    InsertionSpec spec;
    spec.levels = {{g_ins(Partition{1}, one_letter("x"))}};

    Sides chain, flat;
    CHECK(verify_thm_chain({1, {2, 1}, 1, {1}, 1}, spec, ChainVariant::GBasis,
                           ChainNorm::General, &chain)
              .status == Status::Pass);
    CHECK(verify_inserted_equiv(2, 1, 1, 1, 1, spec.levels[0], &flat).status ==
          Status::Pass);
    CHECK(chain.lhs == flat.lhs);
    CHECK(chain.rhs == flat.rhs);
}

TEST_CASE("summary counting and exit codes") {
    VerifyReport pass, fail, skip, over, err;
    pass.status = Status::Pass;
    fail.status = Status::Fail;
    skip.status = Status::NoClaim;
    over.status = Status::BudgetExceeded;
    err.status = Status::Error;

    RunSummary clean;
    clean.count(pass);
    clean.count(skip);
    CHECK(clean.total == 2);
    CHECK(clean.passed == 1);
    CHECK(clean.no_claim == 1);
    CHECK(clean.all_pass());
    CHECK(clean.exit_code() == 0);

    RunSummary aborted;
    aborted.count(pass);
    aborted.count(over);
    CHECK(aborted.budget_exceeded == 1);
    CHECK(aborted.all_pass());
    CHECK(aborted.exit_code() == 2);

    RunSummary broken;
    broken.count(fail);
    broken.count(err);
    CHECK(broken.failed == 1);
    CHECK(broken.errors == 1);
    CHECK_FALSE(broken.all_pass());
    CHECK(broken.exit_code() == 1);
}

TEST_CASE("grid runner argument checking") {
    CHECK(identity_known("q-morris"));
    CHECK_FALSE(identity_known("no-such"));
    CHECK_THROWS_AS(run_identity("no-such", RunOptions{}), std::invalid_argument);

    RunOptions bad;
    bad.overrides["zz"] = {0, 1};
    CHECK_THROWS_AS(run_identity("q-morris", bad), std::invalid_argument);

    RunOptions empty_range;
    empty_range.overrides["k"] = {2, 1};
    CHECK_THROWS_AS(run_identity("q-morris", empty_range), std::invalid_argument);
}

TEST_CASE("grid runner emits reports in grid order") {
    RunOptions opt;
    opt.overrides["i"] = {1, 2};
    opt.overrides["j"] = {1, 1};
    opt.overrides["t"] = {0, 0};
    std::vector<std::string> seen;
    opt.sink = [&](const VerifyReport& r) {
        CHECK(r.status == Status::Pass);
        seen.push_back(r.params[0].second);
    };
    RunSummary sum = run_identity("poch-shift", opt);
    CHECK(sum.total == 2);
    CHECK(sum.passed == 2);
    CHECK(sum.exit_code() == 0);
    CHECK(seen == std::vector<std::string>{"1", "2"});
}

TEST_CASE("grid runner surfaces budget aborts") {
    RunOptions opt;
    opt.overrides["k"] = {2, 2};
    opt.overrides["a"] = {1, 1};
    opt.overrides["b"] = {1, 1};
    opt.overrides["c"] = {1, 1};
    opt.budget = 1;
    RunSummary sum = run_identity("q-morris", opt);
    CHECK(sum.total == 1);
    CHECK(sum.budget_exceeded == 1);
    CHECK(sum.exit_code() == 2);
}
