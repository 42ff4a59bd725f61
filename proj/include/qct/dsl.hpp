#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "qct/ct.hpp"

namespace qct {
namespace dsl {

/* Syntax error with 1-based position and an "expected ..." message. */
class ParseError : public std::exception {
  public:
    ParseError(int line, int col, std::string message)
        : line_(line), col_(col), message_(std::move(message)) {
        text_ = "syntax error at line " + std::to_string(line_) + ", column " +
                std::to_string(col_) + ": " + message_;
    }
    int line() const { return line_; }
    int col() const { return col_; }
    const std::string& message() const { return message_; }
    const char* what() const noexcept override { return text_.c_str(); }

  private:
    int line_, col_;
    std::string message_, text_;
};

enum class AstKind {
    Int,      // integer literal
    Q,        // the letter q
    Z0,       // the distinguished variable
    ZVar,     // z[level, index] with integer-expression arguments a, b
    Ident,    // free letter or integer parameter, depending on position
    Add, Sub, Mul, Div,  // binary, operands a, b
    Neg,      // unary minus, operand a
    Pow,      // a ^ b with integer-expression exponent b
    Poch,     // poch(a, b): ascending factors (1 - q^t a), t < b
    BigProd,  // prod(name = a .. b; body)
    CT,       // CT[vars] body  (top level only)
};

struct Ast;
using AstPtr = std::shared_ptr<const Ast>;

/* one entry of a CT variable list */
struct VarSpec {
    enum Kind { Z0, One, All } kind = Z0;
    AstPtr level, index;  // One: both; All: level only
};

struct Ast {
    AstKind kind;
    long long ivalue = 0;       // Int
    std::string name;           // Ident, BigProd loop name
    AstPtr a, b, body;          // operands (see AstKind)
    std::vector<VarSpec> ct_vars;
    int line = 0, col = 0;
};

/* parse a whole expression document; throws ParseError */
AstPtr parse(std::string_view text);

using Bindings = std::map<std::string, long long>;

/* An elaborated expression: expanded numerator over series-expandable
 * denominator factors.  poch_product marks values that are structurally a
 * product of Pochhammers of monomials, which is what division accepts. */
struct DslValue {
    MultiLaurent num;
    std::vector<GeomFactor> factors;
    bool poch_product = false;
    std::vector<std::pair<Monomial, int>> pochs;  // q-power carries the shift
};

/* elaborate a non-CT expression; throws std::invalid_argument on unbound
 * identifiers, bad divisors, or smallness violations */
DslValue elaborate(const AstPtr& ast, const Bindings& bindings);

/* full evaluation: applies the CT node when present; a top-level value
 * with unconsumed denominator factors is an error */
MultiLaurent evaluate(const AstPtr& ast, const Bindings& bindings);

/* elaborate to a SeriesExpr (top must not be a CT node) */
SeriesExpr elaborate_series(const AstPtr& ast, const Bindings& bindings);

/* print a SeriesExpr in parseable form, grouping consecutive factor shifts
 * back into poch divisors; round-trips through parse + elaborate_series */
std::string print_series(const SeriesExpr& e);

}  // namespace dsl
}  // namespace qct
