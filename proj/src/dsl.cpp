#include "qct/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qct {
namespace dsl {

namespace {

/* ----- lexer ----- */

enum class Tok {
    Int, Ident,
    Plus, Minus, Star, Slash, Caret,
    LParen, RParen, LBracket, RBracket,
    Comma, Semi, Eq, DotDot,
    End,
};

struct Token {
    Tok kind;
    std::string text;
    long long value = 0;
    int line = 1, col = 1;
};

const char* tok_name(Tok t) {
    switch (t) {
        case Tok::Int: return "integer";
        case Tok::Ident: return "identifier";
        case Tok::Plus: return "'+'";
        case Tok::Minus: return "'-'";
        case Tok::Star: return "'*'";
        case Tok::Slash: return "'/'";
        case Tok::Caret: return "'^'";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::LBracket: return "'['";
        case Tok::RBracket: return "']'";
        case Tok::Comma: return "','";
        case Tok::Semi: return "';'";
        case Tok::Eq: return "'='";
        case Tok::DotDot: return "'..'";
        case Tok::End: return "end of input";
    }
    return "?";
}

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    size_t i = 0;
    auto bump = [&](size_t n) {
        for (size_t k = 0; k < n; ++k, ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < text.size()) {
        const char c = text[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            bump(1);
            continue;
        }
        if (c == '#') {  // comment to end of line
            while (i < text.size() && text[i] != '\n') bump(1);
            continue;
        }
        Token t;
        t.line = line;
        t.col = col;
        if (std::isdigit((unsigned char)c)) {
            size_t j = i;
            while (j < text.size() && std::isdigit((unsigned char)text[j])) ++j;
            t.kind = Tok::Int;
            t.text = std::string(text.substr(i, j - i));
            try {
                t.value = std::stoll(t.text);
            } catch (const std::out_of_range&) {
                throw ParseError(line, col, "integer literal out of range");
            }
            bump(j - i);
            out.push_back(std::move(t));
            continue;
        }
        if (std::isalpha((unsigned char)c) || c == '_') {
            size_t j = i;
            while (j < text.size() &&
                   (std::isalnum((unsigned char)text[j]) || text[j] == '_'))
                ++j;
            t.kind = Tok::Ident;
            t.text = std::string(text.substr(i, j - i));
            bump(j - i);
            out.push_back(std::move(t));
            continue;
        }
        if (c == '.') {
            if (i + 1 < text.size() && text[i + 1] == '.') {
                t.kind = Tok::DotDot;
                t.text = "..";
                bump(2);
                out.push_back(std::move(t));
                continue;
            }
            throw ParseError(line, col, "expected '..'");
        }
        switch (c) {
            case '+': t.kind = Tok::Plus; break;
            case '-': t.kind = Tok::Minus; break;
            case '*': t.kind = Tok::Star; break;
            case '/': t.kind = Tok::Slash; break;
            case '^': t.kind = Tok::Caret; break;
            case '(': t.kind = Tok::LParen; break;
            case ')': t.kind = Tok::RParen; break;
            case '[': t.kind = Tok::LBracket; break;
            case ']': t.kind = Tok::RBracket; break;
            case ',': t.kind = Tok::Comma; break;
            case ';': t.kind = Tok::Semi; break;
            case '=': t.kind = Tok::Eq; break;
            default:
                throw ParseError(line, col,
                                 std::string("unexpected character '") + c + "'");
        }
        t.text = std::string(1, c);
        bump(1);
        out.push_back(std::move(t));
    }
    Token end;
    end.kind = Tok::End;
    end.line = line;
    end.col = col;
    out.push_back(end);
    return out;
}

/* ----- parser ----- */

std::shared_ptr<Ast> node(AstKind k, const Token& at) {
    auto n = std::make_shared<Ast>();
    n->kind = k;
    n->line = at.line;
    n->col = at.col;
    return n;
}

class Parser {
  public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    AstPtr parse_top() {
        AstPtr out;
        if (at(Tok::Ident) && cur().text == "CT") {
            const Token ct = eat();
            auto n = node(AstKind::CT, ct);
            expect(Tok::LBracket, "'[' after CT");
            n->ct_vars.push_back(parse_varspec());
            while (at(Tok::Comma)) {
                eat();
                n->ct_vars.push_back(parse_varspec());
            }
            expect(Tok::RBracket, "']' closing the CT variable list");
            n->body = parse_expr();
            out = n;
        } else {
            out = parse_expr();
        }
        if (!at(Tok::End))
            throw ParseError(cur().line, cur().col,
                             std::string("expected end of input, found ") +
                                 tok_name(cur().kind));
        return out;
    }

  private:
    const Token& cur() const { return toks_[pos_]; }
    bool at(Tok k) const { return cur().kind == k; }
    Token eat() { return toks_[pos_++]; }
    Token expect(Tok k, const std::string& what) {
        if (!at(k))
            throw ParseError(cur().line, cur().col,
                             "expected " + what + ", found " + tok_name(cur().kind));
        return eat();
    }

    VarSpec parse_varspec() {
        VarSpec vs;
        if (at(Tok::Ident) && cur().text == "z0") {
            eat();
            vs.kind = VarSpec::Z0;
            return vs;
        }
        if (at(Tok::Ident) && cur().text == "z") {
            eat();
            expect(Tok::LBracket, "'[' after z");
            vs.level = parse_iexpr();
            expect(Tok::Comma, "',' between level and index");
            if (at(Tok::Star)) {
                eat();
                vs.kind = VarSpec::All;
            } else {
                vs.kind = VarSpec::One;
                vs.index = parse_iexpr();
            }
            expect(Tok::RBracket, "']' closing the variable");
            return vs;
        }
        throw ParseError(cur().line, cur().col,
                         std::string("expected z0 or z[...] in CT variable list, found ") +
                             tok_name(cur().kind));
    }

    AstPtr parse_expr() {
        AstPtr lhs;
        if (at(Tok::Minus)) {
            const Token m = eat();
            auto n = node(AstKind::Neg, m);
            n->a = parse_term();
            lhs = n;
        } else {
            lhs = parse_term();
        }
        while (at(Tok::Plus) || at(Tok::Minus)) {
            const Token op = eat();
            auto n = node(op.kind == Tok::Plus ? AstKind::Add : AstKind::Sub, op);
            n->a = lhs;
            n->b = parse_term();
            lhs = n;
        }
        return lhs;
    }

    AstPtr parse_term() {
        AstPtr lhs = parse_factor();
        while (at(Tok::Star) || at(Tok::Slash)) {
            const Token op = eat();
            auto n = node(op.kind == Tok::Star ? AstKind::Mul : AstKind::Div, op);
            n->a = lhs;
            n->b = parse_factor();
            lhs = n;
        }
        return lhs;
    }

    AstPtr parse_factor() {
        AstPtr base = parse_atom();
        if (at(Tok::Caret)) {
            const Token op = eat();
            auto n = node(AstKind::Pow, op);
            n->a = base;
            n->b = parse_iatom();  // tight: -2, k, 3, (k+1)
            return n;
        }
        return base;
    }

    AstPtr parse_atom() {
        if (at(Tok::Int)) {
            const Token t = eat();
            auto n = node(AstKind::Int, t);
            n->ivalue = t.value;
            return n;
        }
        if (at(Tok::LParen)) {
            eat();
            AstPtr inner = parse_expr();
            expect(Tok::RParen, "')'");
            return inner;
        }
        if (at(Tok::Ident)) {
            const Token t = eat();
            if (t.text == "q") return node(AstKind::Q, t);
            if (t.text == "z0") return node(AstKind::Z0, t);
            if (t.text == "z" && at(Tok::LBracket)) {
                eat();
                auto n = node(AstKind::ZVar, t);
                n->a = parse_iexpr();
                expect(Tok::Comma, "',' between level and index");
                n->b = parse_iexpr();
                expect(Tok::RBracket, "']' closing the variable");
                return n;
            }
            if (t.text == "poch") {
                expect(Tok::LParen, "'(' after poch");
                auto n = node(AstKind::Poch, t);
                n->a = parse_expr();
                expect(Tok::Comma, "',' before the Pochhammer order");
                n->b = parse_iexpr();
                expect(Tok::RParen, "')' closing poch");
                return n;
            }
            if (t.text == "prod") {
                expect(Tok::LParen, "'(' after prod");
                auto n = node(AstKind::BigProd, t);
                const Token name = expect(Tok::Ident, "loop identifier");
                n->name = name.text;
                expect(Tok::Eq, "'=' after the loop identifier");
                n->a = parse_iexpr();
                expect(Tok::DotDot, "'..' between the loop bounds");
                n->b = parse_iexpr();
                expect(Tok::Semi, "';' before the loop body");
                n->body = parse_expr();
                expect(Tok::RParen, "')' closing prod");
                return n;
            }
            auto n = node(AstKind::Ident, t);
            n->name = t.text;
            return n;
        }
        throw ParseError(cur().line, cur().col,
                         std::string("expected a value, found ") + tok_name(cur().kind));
    }

    /* integer expressions: +, -, *, unary -, parentheses, literals, idents */
    AstPtr parse_iexpr() {
        AstPtr lhs;
        if (at(Tok::Minus)) {
            const Token m = eat();
            auto n = node(AstKind::Neg, m);
            n->a = parse_iterm();
            lhs = n;
        } else {
            lhs = parse_iterm();
        }
        while (at(Tok::Plus) || at(Tok::Minus)) {
            const Token op = eat();
            auto n = node(op.kind == Tok::Plus ? AstKind::Add : AstKind::Sub, op);
            n->a = lhs;
            n->b = parse_iterm();
            lhs = n;
        }
        return lhs;
    }

    AstPtr parse_iterm() {
        AstPtr lhs = parse_iatom();
        while (at(Tok::Star)) {
            const Token op = eat();
            auto n = node(AstKind::Mul, op);
            n->a = lhs;
            n->b = parse_iatom();
            lhs = n;
        }
        return lhs;
    }

    AstPtr parse_iatom() {
        if (at(Tok::Minus)) {
            const Token m = eat();
            auto n = node(AstKind::Neg, m);
            n->a = parse_iatom();
            return n;
        }
        if (at(Tok::Int)) {
            const Token t = eat();
            auto n = node(AstKind::Int, t);
            n->ivalue = t.value;
            return n;
        }
        if (at(Tok::Ident)) {
            const Token t = eat();
            auto n = node(AstKind::Ident, t);
            n->name = t.text;
            return n;
        }
        if (at(Tok::LParen)) {
            eat();
            AstPtr inner = parse_iexpr();
            expect(Tok::RParen, "')'");
            return inner;
        }
        throw ParseError(cur().line, cur().col,
                         std::string("expected an integer expression, found ") +
                             tok_name(cur().kind));
    }

    std::vector<Token> toks_;
    size_t pos_ = 0;
};

/* ----- elaboration ----- */

long long eval_int(const AstPtr& ast, const Bindings& b) {
    switch (ast->kind) {
        case AstKind::Int:
            return ast->ivalue;
        case AstKind::Ident: {
            auto it = b.find(ast->name);
            if (it == b.end())
                throw std::invalid_argument("unbound parameter '" + ast->name + "'");
            return it->second;
        }
        case AstKind::Add:
            return eval_int(ast->a, b) + eval_int(ast->b, b);
        case AstKind::Sub:
            return eval_int(ast->a, b) - eval_int(ast->b, b);
        case AstKind::Mul:
            return eval_int(ast->a, b) * eval_int(ast->b, b);
        case AstKind::Neg:
            return -eval_int(ast->a, b);
        default:
            throw std::invalid_argument("expected an integer expression");
    }
}

DslValue unit_value() {
    DslValue v;
    v.num = MultiLaurent(1L);
    v.poch_product = true;
    return v;
}

/* convert a structural Pochhammer list into geometric factors */
void divide_by_pochs(DslValue& acc, const std::vector<std::pair<Monomial, int>>& pochs) {
    for (const auto& [mono, order] : pochs) {
        const Monomial base = mono.without_q();
        const auto& entries = base.entries();
        if (entries.size() != 2 || entries[0].second + entries[1].second != 0 ||
            (entries[0].second != 1 && entries[1].second != 1))
            throw std::invalid_argument(
                "divisor poch argument must be q^u * v / w for variables v, w; got " +
                mono.to_string());
        const bool first_num = entries[0].second == 1;
        GeomFactor f;
        f.num_var = first_num ? entries[0].first : entries[1].first;
        f.den_var = first_num ? entries[1].first : entries[0].first;
        for (int t = 0; t < order; ++t) {
            f.qshift = mono.qpow() + t;
            SeriesExpr probe;
            probe.factors = {f};
            check_smallness(probe);  // names the factor on violation
            acc.factors.push_back(f);
        }
    }
}

DslValue elaborate_impl(const AstPtr& ast, const Bindings& b) {
    switch (ast->kind) {
        case AstKind::Int: {
            DslValue v;
            v.num = MultiLaurent(QRat(BigRat(static_cast<long>(ast->ivalue))));
            return v;
        }
        case AstKind::Q: {
            DslValue v;
            v.num = MultiLaurent::term(QRat(1L), Monomial::q(1));
            return v;
        }
        case AstKind::Z0: {
            DslValue v;
            v.num = MultiLaurent::var(z0());
            return v;
        }
        case AstKind::ZVar: {
            const long long level = eval_int(ast->a, b);
            const long long index = eval_int(ast->b, b);
            if (level < 1 || level > (1 << 16) || index < 1 || index > (1 << 16))
                throw std::invalid_argument("variable index out of range");
            DslValue v;
            v.num = MultiLaurent::var(zvar((int32_t)level, (int32_t)index));
            return v;
        }
        case AstKind::Ident: {
            if (b.count(ast->name))
                throw std::invalid_argument("parameter '" + ast->name +
                                            "' used as a letter");
            DslValue v;
            v.num = MultiLaurent::var(free_var(ast->name));
            return v;
        }
        case AstKind::Add:
        case AstKind::Sub: {
            DslValue lhs = elaborate_impl(ast->a, b);
            DslValue rhs = elaborate_impl(ast->b, b);
            if (!lhs.factors.empty() || !rhs.factors.empty())
                throw std::invalid_argument("cannot add values carrying divisors");
            DslValue v;
            v.num = ast->kind == AstKind::Add ? lhs.num + rhs.num : lhs.num - rhs.num;
            return v;
        }
        case AstKind::Mul: {
            DslValue lhs = elaborate_impl(ast->a, b);
            DslValue rhs = elaborate_impl(ast->b, b);
            DslValue v;
            v.num = lhs.num * rhs.num;
            v.factors = std::move(lhs.factors);
            v.factors.insert(v.factors.end(), rhs.factors.begin(), rhs.factors.end());
            v.poch_product = lhs.poch_product && rhs.poch_product;
            if (v.poch_product) {
                v.pochs = std::move(lhs.pochs);
                v.pochs.insert(v.pochs.end(), rhs.pochs.begin(), rhs.pochs.end());
            }
            return v;
        }
        case AstKind::Div: {
            DslValue lhs = elaborate_impl(ast->a, b);
            DslValue rhs = elaborate_impl(ast->b, b);
            if (!rhs.factors.empty())
                throw std::invalid_argument("divisor itself carries divisors");
            if (rhs.poch_product) {
                divide_by_pochs(lhs, rhs.pochs);
                return lhs;
            }
            if (rhs.num.term_count() == 1) {
                const auto& [m, c] = *rhs.num.terms().begin();
                lhs.num = lhs.num.mono_mul(m.inverse()).scaled(c.inverse());
                lhs.poch_product = false;
                lhs.pochs.clear();
                return lhs;
            }
            throw std::invalid_argument(
                "division only by Pochhammer products or single terms");
        }
        case AstKind::Neg: {
            DslValue v = elaborate_impl(ast->a, b);
            v.num = -v.num;
            v.poch_product = false;
            v.pochs.clear();
            return v;
        }
        case AstKind::Pow: {
            DslValue base = elaborate_impl(ast->a, b);
            const long long e = eval_int(ast->b, b);
            if (e == 1) return base;
            if (e < 0) {
                if (!base.factors.empty() || base.num.term_count() != 1)
                    throw std::invalid_argument(
                        "negative power requires a single-term base");
                const auto& [m, c] = *base.num.terms().begin();
                DslValue v;
                v.num = MultiLaurent::term(c.inverse(), m.inverse());
                for (int k = 1; k < -e; ++k)
                    v.num = v.num.mono_mul(m.inverse()).scaled(c.inverse());
                return v;
            }
            DslValue v;
            v.num = base.num.pow((uint64_t)e);
            for (long long k = 0; k < e; ++k)
                v.factors.insert(v.factors.end(), base.factors.begin(),
                                 base.factors.end());
            v.poch_product = base.poch_product;
            if (v.poch_product)
                for (long long k = 0; k < e; ++k)
                    v.pochs.insert(v.pochs.end(), base.pochs.begin(), base.pochs.end());
            return v;
        }
        case AstKind::Poch: {
            DslValue arg = elaborate_impl(ast->a, b);
            if (!arg.factors.empty())
                throw std::invalid_argument("Pochhammer argument carries divisors");
            const long long order = eval_int(ast->b, b);
            if (order < 0)
                throw std::invalid_argument("negative Pochhammer order");
            DslValue v;
            v.num = MultiLaurent(1L);
            for (long long t = 0; t < order; ++t)
                v.num *= MultiLaurent(1L) - arg.num.scaled(QRat::q_power(t));
            /* keep the structural view when the argument is one clean term */
            if (arg.num.term_count() == 1) {
                const auto& [m, c] = *arg.num.terms().begin();
                if (c.has_unit_den() && c.num().is_monomial() &&
                    c.num().leading_coeff() == 1) {
                    Monomial tagged = m;
                    tagged.shift_q(c.num().max_exp());
                    v.poch_product = true;
                    v.pochs.emplace_back(tagged, (int)order);
                }
            }
            return v;
        }
        case AstKind::BigProd: {
            const long long lo = eval_int(ast->a, b);
            const long long hi = eval_int(ast->b, b);
            DslValue acc = unit_value();
            Bindings inner = b;
            for (long long i = lo; i <= hi; ++i) {
                inner[ast->name] = i;
                DslValue step = elaborate_impl(ast->body, inner);
                acc.num *= step.num;
                acc.factors.insert(acc.factors.end(), step.factors.begin(),
                                   step.factors.end());
                acc.poch_product = acc.poch_product && step.poch_product;
                if (acc.poch_product)
                    acc.pochs.insert(acc.pochs.end(), step.pochs.begin(),
                                     step.pochs.end());
                else
                    acc.pochs.clear();
            }
            return acc;
        }
        case AstKind::CT:
            throw std::invalid_argument("CT is only allowed at the top level");
    }
    throw std::logic_error("elaborate: unknown node");
}

std::vector<VarId> resolve_ct_vars(const std::vector<VarSpec>& specs,
                                   const DslValue& v, const Bindings& b) {
    std::set<VarId, decltype(&var_less)> vars(&var_less);
    auto add_level = [&](int32_t level) {
        for (const VarId& w : v.num.vars())
            if (w.level == level) vars.insert(w);
        for (const GeomFactor& f : v.factors) {
            if (f.num_var.level == level) vars.insert(f.num_var);
            if (f.den_var.level == level) vars.insert(f.den_var);
        }
    };
    for (const VarSpec& s : specs) {
        switch (s.kind) {
            case VarSpec::Z0:
                vars.insert(z0());
                break;
            case VarSpec::One: {
                const long long level = eval_int(s.level, b);
                const long long index = eval_int(s.index, b);
                if (level < 1 || index < 1)
                    throw std::invalid_argument("variable index out of range");
                vars.insert(zvar((int32_t)level, (int32_t)index));
                break;
            }
            case VarSpec::All: {
                const long long level = eval_int(s.level, b);
                if (level < 1)
                    throw std::invalid_argument("variable level out of range");
                add_level((int32_t)level);
                break;
            }
        }
    }
    return {vars.begin(), vars.end()};
}

}  // namespace

AstPtr parse(std::string_view text) { return Parser(lex(text)).parse_top(); }

DslValue elaborate(const AstPtr& ast, const Bindings& bindings) {
    if (ast->kind == AstKind::CT)
        throw std::invalid_argument("elaborate: CT nodes are handled by evaluate");
    return elaborate_impl(ast, bindings);
}

MultiLaurent evaluate(const AstPtr& ast, const Bindings& bindings) {
    if (ast->kind == AstKind::CT) {
        DslValue v = elaborate_impl(ast->body, bindings);
        const std::vector<VarId> vars = resolve_ct_vars(ast->ct_vars, v, bindings);
        SeriesExpr e;
        e.numerator = std::move(v.num);
        e.factors = std::move(v.factors);
        return constant_term(e, vars);
    }
    DslValue v = elaborate_impl(ast, bindings);
    if (!v.factors.empty())
        throw std::invalid_argument(
            "expression carries denominator factors; wrap it in CT[...]");
    return v.num;
}

SeriesExpr elaborate_series(const AstPtr& ast, const Bindings& bindings) {
    if (ast->kind == AstKind::CT)
        throw std::invalid_argument("elaborate_series: unexpected CT node");
    DslValue v = elaborate_impl(ast, bindings);
    SeriesExpr e;
    e.numerator = std::move(v.num);
    e.factors = std::move(v.factors);
    return e;
}

std::string print_series(const SeriesExpr& e) {
    std::ostringstream os;
    os << "(" << e.numerator.to_string() << ")";
    std::vector<GeomFactor> fs = e.factors;
    std::sort(fs.begin(), fs.end(), geom_factor_less);
    for (size_t i = 0; i < fs.size();) {
        size_t j = i + 1;
        while (j < fs.size() && fs[j].num_var == fs[i].num_var &&
               fs[j].den_var == fs[i].den_var &&
               fs[j].qshift == fs[i].qshift + (int64_t)(j - i))
            ++j;
        Monomial m = Monomial::q(fs[i].qshift) * Monomial::var(fs[i].num_var) *
                     Monomial::var(fs[i].den_var, -1);
        os << " / poch(" << m.to_string() << ", " << j - i << ")";
        i = j;
    }
    return os.str();
}

}  // namespace dsl
}  // namespace qct
