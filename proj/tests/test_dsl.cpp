#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <string>

#include "qct/dsl.hpp"
#include "qct/qblocks.hpp"

using namespace qct;

namespace {

MultiLaurent eval_text(const std::string& text, const dsl::Bindings& b = {}) {
    return dsl::evaluate(dsl::parse(text), b);
}

void expect_syntax_error(const std::string& text, int line, int col,
                         const std::string& message) {
    INFO("input: " << text);
    try {
        dsl::parse(text);
        FAIL_CHECK("parse accepted the input");
    } catch (const dsl::ParseError& e) {
        CHECK(e.line() == line);
        CHECK(e.col() == col);
        CHECK(e.message() == message);
        const std::string what = e.what();
        CHECK(what.find("line " + std::to_string(line)) != std::string::npos);
        CHECK(what.find("column " + std::to_string(col)) != std::string::npos);
    }
}

}  // namespace

TEST_CASE("printed series round-trip through the parser") {
    for (const SeriesExpr& e :
         {build_morris_lhs({2, 1, 1, 2}), build_L({2, 1, 1, 0, 1})}) {
        const std::string text = dsl::print_series(e);
        CAPTURE(text);
        SeriesExpr back = dsl::elaborate_series(dsl::parse(text), {});
        CHECK(back.numerator == e.numerator);
        CHECK(back.equivalent(e));
    }
}

TEST_CASE("printed values round-trip through evaluation") {
    const MultiLaurent samples[] = {
        MultiLaurent(),
        MultiLaurent(7L),
        MultiLaurent(QRat::q_power(-2)),
        eval_L({1, 1, 1, 0, 1}),
        eval_L({2, 1, 1, 1, 1}),
        pochhammer(Monomial::var(free_var("u")) * Monomial::var(free_var("v"), -1), 2),
    };
    for (const MultiLaurent& m : samples) {
        const std::string text = m.to_string();
        CAPTURE(text);
        CHECK(eval_text(text) == m);
    }
}

TEST_CASE("positioned syntax errors") {
    expect_syntax_error("1 +", 1, 4, "expected a value, found end of input");
    expect_syntax_error("poch(x 2)", 1, 8,
                        "expected ',' before the Pochhammer order, found integer");
    expect_syntax_error("poch(x, 2", 1, 10,
                        "expected ')' closing poch, found end of input");
    expect_syntax_error("z[1]", 1, 4,
                        "expected ',' between level and index, found ']'");
    expect_syntax_error("z[", 1, 3,
                        "expected an integer expression, found end of input");
    expect_syntax_error("CT[y] x", 1, 4,
                        "expected z0 or z[...] in CT variable list, found identifier");
    expect_syntax_error("x ^ (2", 1, 7, "expected ')', found end of input");
    expect_syntax_error("prod(2; x)", 1, 6, "expected loop identifier, found integer");
    expect_syntax_error("prod(i=1; x)", 1, 9,
                        "expected '..' between the loop bounds, found ';'");
    expect_syntax_error("prod(i=1..2 x)", 1, 13,
                        "expected ';' before the loop body, found identifier");
    expect_syntax_error("(x", 1, 3, "expected ')', found end of input");
    expect_syntax_error("x )", 1, 3, "expected end of input, found ')'");
    expect_syntax_error("q^", 1, 3,
                        "expected an integer expression, found end of input");
    expect_syntax_error("CT[z0 x", 1, 7,
                        "expected ']' closing the CT variable list, found identifier");
    expect_syntax_error("CT z0", 1, 4, "expected '[' after CT, found identifier");
    expect_syntax_error("poch()", 1, 6, "expected a value, found ')'");
    expect_syntax_error("z[1,*]", 1, 5, "expected an integer expression, found '*'");
    expect_syntax_error("1 2", 1, 3, "expected end of input, found integer");
    expect_syntax_error("99999999999999999999", 1, 1, "integer literal out of range");
    expect_syntax_error(" ", 1, 2, "expected a value, found end of input");
    expect_syntax_error("1 +\n* 2", 2, 1, "expected a value, found '*'");
    expect_syntax_error("CT[z[1,1]]", 1, 11, "expected a value, found end of input");
    expect_syntax_error("poch(x, )", 1, 9,
                        "expected an integer expression, found ')'");
    expect_syntax_error("1 / CT[z0] z0", 1, 7, "expected end of input, found '['");
}

TEST_CASE("integer parameters and loop shadowing") {
    CHECK(eval_text("prod(i=1..2; q^i)") == MultiLaurent(QRat::q_power(3)));
    CHECK(eval_text("prod(i=3..2; q^i)") == MultiLaurent(1L));

    dsl::Bindings b{{"a", 2}};
    CHECK(eval_text("y^a * y", b) ==
          MultiLaurent::var(free_var("y")).pow(3));
    /* the loop variable wins over an ambient binding of the same name */
    dsl::Bindings shadow{{"i", 100}};
    CHECK(eval_text("prod(i=1..1; q^i)", shadow) == MultiLaurent(QRat::q_power(1)));

    dsl::Bindings with_y{{"y", 2}};
    CHECK_THROWS_WITH_AS(eval_text("y", with_y), "parameter 'y' used as a letter",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(eval_text("x^w"), "unbound parameter 'w'",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(dsl::evaluate(dsl::parse("z[1,1]^w"), {}),
                         "unbound parameter 'w'", std::invalid_argument);
}

TEST_CASE("constant-term extraction forms") {
    /* a wildcard picks up variables on both sides of the division */
    CHECK(eval_text("CT[z[1,*]] 1 / poch(z[1,1] * w^-1, 1)") == MultiLaurent(1L));
    /* plain coefficient extraction, no geometric factors involved */
    CHECK(eval_text("CT[z0] poch(q * z0, 2) * z0^-1") ==
          MultiLaurent(-QRat::q_power(1) - QRat::q_power(2)));
    CHECK(eval_text("CT[z0] z0^-1 * z0") == MultiLaurent(1L));
    /* named and wildcard variable lists agree */
    const std::string kernel = "poch(z0 * z[1,1]^-1, 1) / poch(z[1,1] * z[2,1]^-1, 1)";
    CHECK(eval_text("CT[z[1,1]] " + kernel) == eval_text("CT[z[1,*]] " + kernel));
}

TEST_CASE("comments and layout") {
    CHECK(eval_text("# heading\n1 + 1  # trailing note\n") == MultiLaurent(2L));
    CHECK(eval_text("\n\n  q ^ 2\n") == MultiLaurent(QRat::q_power(2)));
}

TEST_CASE("elaboration rejects bad divisors and orders") {
    CHECK_THROWS_AS(eval_text("poch(x, -1)"), std::invalid_argument);
    CHECK_THROWS_AS(eval_text("(1+x)/(1+y)"), std::invalid_argument);
    CHECK_THROWS_AS(eval_text("1/(poch(x,1) + 1)"), std::invalid_argument);
    /* unconsumed geometric factors cannot be returned as a plain value */
    CHECK_THROWS_AS(eval_text("1 / poch(z[1,1] * z[2,1]^-1, 1)"), std::invalid_argument);
    /* smallness violation: series direction runs against the level order */
    CHECK_THROWS_AS(eval_text("CT[z[2,1]] 1 / poch(z[2,1] * z[1,1]^-1, 1)"),
                    std::invalid_argument);
}

TEST_CASE("parameterized kernel matches the closed product") {
    const std::string text =
        "CT[z[1,*]]\n"
        "  prod(i=1..k; poch(z0 * z[1,i]^-1, a) * poch(q * z[1,i] * z0^-1, b))\n"
        "* prod(i=1..k; prod(j=i+1..k;\n"
        "    poch(z[1,i] * z[1,j]^-1, c) * poch(q * z[1,j] * z[1,i]^-1, c)))\n";
    for (int k = 1; k <= 2; ++k)
        for (int a = 0; a <= 2; ++a) {
            dsl::Bindings b{{"k", k}, {"a", a}, {"b", 1}, {"c", 1}};
            CHECK(eval_text(text, b) ==
                  MultiLaurent(QRat(morris_product({k, a, 1, 1}))));
        }
}
