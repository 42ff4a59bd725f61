#include "qct/theorems.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

namespace qct {

namespace {

int64_t now_ms() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

VerifyReport compare(VerifyReport r, int64_t t0, const MultiLaurent& lhs,
                     const MultiLaurent& rhs, Sides* sides) {
    if (sides) *sides = Sides{lhs, rhs};
    if (lhs != rhs) {
        r.status = Status::Fail;
        r.lhs = lhs.to_string();
        r.rhs = rhs.to_string();
    }
    r.millis = now_ms() - t0;
    return r;
}

VerifyReport no_claim(VerifyReport r, int64_t t0, const std::string& why) {
    r.status = Status::NoClaim;
    r.detail = why;
    r.millis = now_ms() - t0;
    return r;
}

/* (-1)^{k1(b+1-c)} q^{k1 binom(b+2-c, 2)} */
QRat equiv_prefactor(int64_t k1, int64_t b, int64_t c) {
    QRat pre = QRat::q_power(k1 * choose2(b + 2 - c));
    if ((k1 * (b + 1 - c)) % 2 != 0) pre = -pre;
    return pre;
}

/* every variable of every letter satisfies pred */
template <typename Pred>
bool alphabet_vars_ok(const Alphabet& a, Pred pred) {
    for (const VarId& v : a.vars())
        if (!pred(v)) return false;
    return true;
}

std::string param_list(const LevelInsertions& ins) {
    std::ostringstream os;
    for (size_t i = 0; i < ins.size(); ++i) {
        os << (i ? " * " : "") << ins[i].f.to_string();
        if (!ins[i].x.empty()) os << "[.+X" << i + 1 << "]";
        if (ins[i].y) os << "[Y" << i + 1 << ".]";
    }
    return os.str().empty() ? "1" : os.str();
}

/* Validate one level's insertions for a g-basis statement: degrees match
 * the shapes, the g-expansion is supported on lengths <= l(shape), no
 * scaling alphabets, and the length budget holds.  Returns a diagnostic on
 * violation. */
std::optional<std::string> check_g_level(const LevelInsertions& ins, int budget,
                                         int c) {
    int64_t used = 0;
    for (const Insertion& in : ins) {
        if (in.y)
            throw std::invalid_argument("g-basis insertions carry no scaling alphabet");
        if (in.f.degree() != in.shape.size())
            return "insertion degree differs from its shape size";
        int support;
        if (in.f.basis() == SymBasis::G) {
            support = in.f.max_support_length();
        } else {
            support = 0;
            for (const auto& [mu, coeff] : convert_to_g_basis(in.f, (int)in.f.degree(), c)) {
                (void)coeff;
                support = std::max(support, mu.length());
            }
        }
        if (support > in.shape.length())
            return "g-expansion support longer than the shape";
        used += in.shape.length();
    }
    if (used > budget) return "sum of shape lengths exceeds the level budget";
    return std::nullopt;
}

/* p-basis variant: budget on sizes, scaling alphabets allowed */
std::optional<std::string> check_p_level(const LevelInsertions& ins, int budget) {
    int64_t used = 0;
    for (const Insertion& in : ins) {
        if (in.f.basis() != SymBasis::P)
            return "p-basis statement requires p-basis insertions";
        if (in.f.degree() != in.shape.size())
            return "insertion degree differs from its shape size";
        used += in.shape.size();
    }
    if (used > budget) return "sum of shape sizes exceeds the level budget";
    return std::nullopt;
}

MultiLaurent unit_rows(const std::vector<VarId>& vars, int a, int b) {
    MultiLaurent out(1L);
    for (const VarId& v : vars) {
        out *= pochhammer(Monomial::var(v, -1), a);
        out *= pochhammer(Monomial::q(1) * Monomial::var(v), b);
    }
    return out;
}

Monomial var_power_product(const std::vector<VarId>& vars, int64_t e) {
    Monomial m;
    for (const VarId& v : vars) m *= Monomial::var(v).pow(e);
    return m;
}

const Alphabet& unit_alphabet() {
    static const Alphabet one = Alphabet::single(Monomial());
    return one;
}

}  // namespace

VerifyReport verify_lemma_bc(int k1, int k2, int a, int c, Sides* sides) {
    VerifyReport r;
    r.identity = "transfer";
    r.set_param("k1", k1);
    r.set_param("k2", k2);
    r.set_param("a", a);
    r.set_param("c", c);
    const int64_t t0 = now_ms();
    if (k1 < k2 || k2 < 0 || a < 0 || c < 1)
        throw std::invalid_argument("verify_lemma_bc: need k1 >= k2 >= 0, a >= 0, c >= 1");

    MultiLaurent lhs = eval_L({k1, k2, a, c - 1, c});
    MultiLaurent rhs(QRat(morris_product({k1, a, c - 1, c})));
    for (const VarId& v : level_vars(2, k2))
        rhs *= pochhammer(Monomial::var(z0()) * Monomial::var(v, -1), a);
    return compare(std::move(r), t0, lhs, rhs, sides);
}

VerifyReport verify_prop_h(int k1, int k2, int a, int c, const Partition& lam,
                           Sides* sides) {
    VerifyReport r;
    r.identity = "transfer-h";
    r.set_param("k1", k1);
    r.set_param("k2", k2);
    r.set_param("a", a);
    r.set_param("c", c);
    r.set_param("lambda", lam.to_string());
    const int64_t t0 = now_ms();
    if (k1 < k2 || k2 < 0 || a < 0 || c < 1)
        throw std::invalid_argument("verify_prop_h: need k1 >= k2 >= 0, a >= 0, c >= 1");
    if (lam.length() > k1 - k2)
        return no_claim(std::move(r), t0, "shape longer than k1 - k2");

    std::vector<VarId> z1 = level_vars(1, k1);
    SeriesExpr e;
    e.numerator = g_eval(lam, Alphabet::from_vars(z1), c) *
                  morris_rows(z0(), z1, a, c - 1) * vandermonde_block(z1, c);
    e.numerator = e.numerator.mono_mul(Monomial::var(z0(), -lam.size()));
    e.factors = coupling_factors(z1, level_vars(2, k2), c);
    MultiLaurent lhs = constant_term(e, z1);

    /* the scalar h_lam[(q^a - 1)/(1 - q)], with its closed form and its
     * g-alphabet form cross-checked */
    MultiLaurent scalar = h_eval(lam, geometric_difference(a, 0, 1));
    QRat closed(1L);
    for (int part : lam.parts()) {
        QRat f = QRat(QPoly(q_binomial(a, part))) * QRat::q_power(choose2(part));
        if (part % 2 != 0) f = -f;
        closed *= f;
    }
    if (scalar != MultiLaurent(closed) ||
        scalar != g_eval(lam, geometric_difference(a, 0, c), c)) {
        r.status = Status::Fail;
        r.detail = "plethystic scalar disagrees with its closed form";
        r.millis = now_ms() - t0;
        return r;
    }

    MultiLaurent rhs = scalar.scaled(QRat(morris_product({k1, a, c - 1, c})));
    for (const VarId& v : level_vars(2, k2))
        rhs *= pochhammer(Monomial::var(z0()) * Monomial::var(v, -1), a);
    return compare(std::move(r), t0, lhs, rhs, sides);
}

VerifyReport verify_thm2(int k1, int k2, int a, int c, const LevelInsertions& ins,
                         Sides* sides) {
    VerifyReport r;
    r.identity = "transfer-g";
    r.set_param("k1", k1);
    r.set_param("k2", k2);
    r.set_param("a", a);
    r.set_param("c", c);
    r.set_param("f", param_list(ins));
    const int64_t t0 = now_ms();
    if (k1 < k2 || k2 < 0 || a < 0 || c < 1)
        throw std::invalid_argument("verify_thm2: need k1 >= k2 >= 0, a >= 0, c >= 1");
    for (const Insertion& in : ins)
        if (!alphabet_vars_ok(in.x, [](const VarId& v) { return v.level != 1; }))
            throw std::invalid_argument("verify_thm2: X alphabets must avoid level 1");
    if (auto why = check_g_level(ins, k1 - k2, c))
        return no_claim(std::move(r), t0, *why);

    std::vector<VarId> z1 = level_vars(1, k1);
    const Alphabet zalpha = Alphabet::from_vars(z1);
    int64_t totdeg = 0;
    MultiLaurent inserted(1L);
    for (const Insertion& in : ins) {
        inserted *= in.f.eval(zalpha + in.x, c);
        totdeg += in.f.degree();
    }

    SeriesExpr e;
    e.numerator = inserted * morris_rows(z0(), z1, a, c - 1) * vandermonde_block(z1, c);
    e.numerator = e.numerator.mono_mul(Monomial::var(z0(), -totdeg));
    e.factors = coupling_factors(z1, level_vars(2, k2), c);
    MultiLaurent lhs = constant_term(e, z1);

    MultiLaurent rhs(QRat(morris_product({k1, a, c - 1, c})));
    const Monomial z0inv = Monomial::var(z0(), -1);
    for (const Insertion& in : ins)
        rhs *= in.f.eval(geometric_difference(a, 0, c) + in.x.scaled(z0inv), c);
    for (const VarId& v : level_vars(2, k2))
        rhs *= pochhammer(Monomial::var(z0()) * Monomial::var(v, -1), a);
    return compare(std::move(r), t0, lhs, rhs, sides);
}

VerifyReport verify_thm3(int k1, int k2, int a, int c, const LevelInsertions& ins,
                         Sides* sides) {
    VerifyReport r;
    r.identity = "transfer-p";
    r.set_param("k1", k1);
    r.set_param("k2", k2);
    r.set_param("a", a);
    r.set_param("c", c);
    r.set_param("f", param_list(ins));
    const int64_t t0 = now_ms();
    if (k1 < k2 || k2 < 0 || a < 0 || c < 1)
        throw std::invalid_argument("verify_thm3: need k1 >= k2 >= 0, a >= 0, c >= 1");
    auto off_level1 = [](const VarId& v) { return v.level != 1; };
    for (const Insertion& in : ins) {
        if (!alphabet_vars_ok(in.x, off_level1) ||
            (in.y && !alphabet_vars_ok(*in.y, off_level1)))
            throw std::invalid_argument("verify_thm3: alphabets must avoid level 1");
    }
    if (auto why = check_p_level(ins, k1 - k2))
        return no_claim(std::move(r), t0, *why);

    std::vector<VarId> z1 = level_vars(1, k1);
    const Alphabet zalpha = Alphabet::from_vars(z1);
    int64_t totdeg = 0;
    MultiLaurent inserted(1L);
    for (const Insertion& in : ins) {
        const Alphabet& y = in.y ? *in.y : unit_alphabet();
        inserted *= in.f.eval(zalpha * y + in.x, c);
        totdeg += in.f.degree();
    }

    SeriesExpr e;
    e.numerator = inserted * morris_rows(z0(), z1, a, c - 1) * vandermonde_block(z1, c);
    e.numerator = e.numerator.mono_mul(Monomial::var(z0(), -totdeg));
    e.factors = coupling_factors(z1, level_vars(2, k2), c);
    MultiLaurent lhs = constant_term(e, z1);

    MultiLaurent rhs(QRat(morris_product({k1, a, c - 1, c})));
    const Monomial z0inv = Monomial::var(z0(), -1);
    for (const Insertion& in : ins) {
        const Alphabet& y = in.y ? *in.y : unit_alphabet();
        rhs *= in.f.eval(geometric_difference(a, 0, c) * y + in.x.scaled(z0inv), c);
    }
    for (const VarId& v : level_vars(2, k2))
        rhs *= pochhammer(Monomial::var(z0()) * Monomial::var(v, -1), a);
    return compare(std::move(r), t0, lhs, rhs, sides);
}

VerifyReport verify_lemma_bc2(int k1, int k2, int a, int b, int c, Sides* sides) {
    VerifyReport r;
    r.identity = "transfer-shifted";
    r.set_param("k1", k1);
    r.set_param("k2", k2);
    r.set_param("a", a);
    r.set_param("b", b);
    r.set_param("c", c);
    const int64_t t0 = now_ms();
    if (k1 < k2 || k2 < 0 || a < 0 || b < 0 || c < 1)
        throw std::invalid_argument(
            "verify_lemma_bc2: need k1 >= k2 >= 0, a, b >= 0, c >= 1");
    if (a + b + 1 < c)
        return no_claim(std::move(r), t0, "a + b + 1 < c: outside the hypothesis");

    std::vector<VarId> z1 = level_vars(1, k1);
    SeriesExpr e;
    e.numerator = morris_rows(z0(), z1, a, b) * vandermonde_block(z1, c);
    e.numerator = e.numerator.mono_mul(
        Monomial::var(z0(), (int64_t)(b + 1 - c) * k1) *
        var_power_product(z1, c - 1 - b));
    e.factors = coupling_factors(z1, level_vars(2, k2), c, b + 1 - c);
    MultiLaurent lhs = constant_term(e, z1);

    MultiLaurent rhs(equiv_prefactor(k1, b, c) *
                     QRat(morris_product({k1, a + b + 1 - c, c - 1, c})));
    for (const VarId& v : level_vars(2, k2))
        rhs *= pochhammer(Monomial::var(z0()) * Monomial::var(v, -1), a + b + 1 - c);
    return compare(std::move(r), t0, lhs, rhs, sides);
}

VerifyReport verify_prop_h_equiv(int k1, int k2, int a, int b, int c,
                                 const Partition& lam, Sides* sides) {
    VerifyReport r;
    r.identity = "transfer-h-shifted";
    r.set_param("k1", k1);
    r.set_param("k2", k2);
    r.set_param("a", a);
    r.set_param("b", b);
    r.set_param("c", c);
    r.set_param("lambda", lam.to_string());
    const int64_t t0 = now_ms();
    if (k1 < k2 || k2 < 0 || a < 0 || b < 0 || c < 1)
        throw std::invalid_argument(
            "verify_prop_h_equiv: need k1 >= k2 >= 0, a, b >= 0, c >= 1");
    if (a + b + 1 < c)
        return no_claim(std::move(r), t0, "a + b + 1 < c: outside the hypothesis");
    if (lam.length() > k1 - k2)
        return no_claim(std::move(r), t0, "shape longer than k1 - k2");

    std::vector<VarId> z1 = level_vars(1, k1);
    SeriesExpr e;
    e.numerator = g_eval(lam, Alphabet::from_vars(z1), c) *
                  morris_rows(z0(), z1, a, b) * vandermonde_block(z1, c);
    e.numerator = e.numerator.mono_mul(
        Monomial::var(z0(), (int64_t)(b + 1 - c) * k1 - lam.size()) *
        var_power_product(z1, c - 1 - b));
    e.factors = coupling_factors(z1, level_vars(2, k2), c, b + 1 - c);
    MultiLaurent lhs = constant_term(e, z1);

    MultiLaurent scalar = h_eval(lam, geometric_difference(a, c - b - 1, 1));
    if (scalar != g_eval(lam, geometric_difference(a, c - b - 1, c), c)) {
        r.status = Status::Fail;
        r.detail = "plethystic scalar disagrees with its g-alphabet form";
        r.millis = now_ms() - t0;
        return r;
    }

    MultiLaurent rhs = scalar.scaled(equiv_prefactor(k1, b, c) *
                                     QRat(morris_product({k1, a + b + 1 - c, c - 1, c})));
    for (const VarId& v : level_vars(2, k2))
        rhs *= pochhammer(Monomial::var(z0()) * Monomial::var(v, -1), a + b + 1 - c);
    return compare(std::move(r), t0, lhs, rhs, sides);
}

VerifyReport verify_inserted_equiv(int k1, int k2, int a, int b, int c,
                                   const LevelInsertions& ins, Sides* sides) {
    VerifyReport r;
    r.identity = "transfer-g-shifted";
    r.set_param("k1", k1);
    r.set_param("k2", k2);
    r.set_param("a", a);
    r.set_param("b", b);
    r.set_param("c", c);
    r.set_param("f", param_list(ins));
    const int64_t t0 = now_ms();
    if (k1 < k2 || k2 < 0 || a < 0 || b < 0 || c < 1)
        throw std::invalid_argument(
            "verify_inserted_equiv: need k1 >= k2 >= 0, a, b >= 0, c >= 1");
    for (const Insertion& in : ins)
        if (!alphabet_vars_ok(in.x, [](const VarId& v) { return v.level != 0 && v.level != 1; }))
            throw std::invalid_argument(
                "verify_inserted_equiv: X alphabets must avoid z0 and level 1");
    if (a + b + 1 < c)
        return no_claim(std::move(r), t0, "a + b + 1 < c: outside the hypothesis");
    if (auto why = check_g_level(ins, k1 - k2, c))
        return no_claim(std::move(r), t0, *why);

    std::vector<VarId> z1 = level_vars(1, k1);
    const Alphabet zalpha = Alphabet::from_vars(z1);
    MultiLaurent inserted(1L);
    for (const Insertion& in : ins) inserted *= in.f.eval(zalpha + in.x, c);

    SeriesExpr e;
    e.numerator = inserted * unit_rows(z1, a, b) * vandermonde_block(z1, c);
    e.numerator = e.numerator.mono_mul(var_power_product(z1, c - 1 - b));
    e.factors = coupling_factors(z1, level_vars(2, k2), c, b + 1 - c);
    MultiLaurent lhs = constant_term(e, z1);

    MultiLaurent rhs(equiv_prefactor(k1, b, c) *
                     QRat(morris_product({k1, a + b + 1 - c, c - 1, c})));
    for (const Insertion& in : ins)
        rhs *= in.f.eval(geometric_difference(a, c - b - 1, c) + in.x, c);
    for (const VarId& v : level_vars(2, k2))
        rhs *= pochhammer(Monomial::var(v, -1), a + b + 1 - c);
    return compare(std::move(r), t0, lhs, rhs, sides);
}

VerifyReport verify_thm_chain(const ChainParams& cp, const InsertionSpec& spec,
                              ChainVariant variant, ChainNorm norm, Sides* sides) {
    VerifyReport r;
    r.identity = variant == ChainVariant::GBasis ? "chain-g" : "chain-p";
    r.set_param("n", cp.n);
    {
        std::ostringstream os;
        for (size_t i = 0; i < cp.k.size(); ++i) os << (i ? "," : "") << cp.k[i];
        r.set_param("k", os.str());
    }
    r.set_param("a", cp.a);
    {
        std::ostringstream os;
        for (size_t i = 0; i < cp.b.size(); ++i) os << (i ? "," : "") << cp.b[i];
        r.set_param("b", os.str());
    }
    r.set_param("c", cp.c);
    const int64_t t0 = now_ms();

    if (cp.n < 1 || (int)cp.k.size() != cp.n + 1 || (int)cp.b.size() != cp.n ||
        cp.a < 0 || cp.c < 1)
        throw std::invalid_argument("verify_thm_chain: malformed parameters");
    for (int s = 0; s < cp.n; ++s)
        if (cp.b[(size_t)s] < 0)
            throw std::invalid_argument("verify_thm_chain: b_s >= 0 required");
    for (int s = 0; s + 1 <= cp.n; ++s)
        if (cp.k[(size_t)s] < cp.k[(size_t)s + 1] || cp.k[(size_t)s + 1] < 0)
            throw std::invalid_argument("verify_thm_chain: k must decrease weakly to >= 0");
    if ((int)spec.levels.size() > cp.n)
        throw std::invalid_argument("verify_thm_chain: more insertion levels than levels");
    if (norm == ChainNorm::Collapsed)
        for (int s = 0; s < cp.n; ++s)
            if (cp.b[(size_t)s] != cp.c - 1)
                throw std::invalid_argument(
                    "verify_thm_chain: collapsed normalization pins b_s = c - 1");

    /* hypotheses */
    for (int s = 1; s <= cp.n; ++s) {
        if (cp.a + cp.sigma(s) + s < s * cp.c) {
            std::ostringstream os;
            os << "staircase hypothesis fails at level " << s;
            return no_claim(std::move(r), t0, os.str());
        }
        const int budget = cp.k[(size_t)s - 1] - cp.k[(size_t)s];
        const LevelInsertions& ins = spec.at_level(s);
        auto z_free = [](const VarId& v) { return v.level >= kFreeLevel; };
        for (const Insertion& in : ins) {
            if (!alphabet_vars_ok(in.x, z_free) ||
                (in.y && !alphabet_vars_ok(*in.y, z_free)))
                throw std::invalid_argument(
                    "verify_thm_chain: alphabets must be independent of every z");
        }
        auto why = variant == ChainVariant::GBasis ? check_g_level(ins, budget, cp.c)
                                                   : check_p_level(ins, budget);
        if (why) {
            std::ostringstream os;
            os << "level " << s << ": " << *why;
            return no_claim(std::move(r), t0, os.str());
        }
    }

    /* LHS: eliminate level by level */
    MultiLaurent state(1L);
    for (int s = 1; s <= cp.n; ++s) {
        const int ks = cp.k[(size_t)s - 1];
        const int bs = cp.b[(size_t)s - 1];
        const int as = s == 1 ? cp.a : 0;
        std::vector<VarId> zs = level_vars(s, ks);

        MultiLaurent block = unit_rows(zs, as, bs) * vandermonde_block(zs, cp.c);
        const Alphabet zalpha = Alphabet::from_vars(zs);
        for (const Insertion& in : spec.at_level(s)) {
            if (variant == ChainVariant::GBasis) {
                block *= in.f.eval(zalpha + in.x, cp.c);
            } else {
                const Alphabet& y = in.y ? *in.y : unit_alphabet();
                block *= in.f.eval(zalpha * y + in.x, cp.c);
            }
        }

        SeriesExpr e;
        e.numerator = (state * block).mono_mul(var_power_product(zs, cp.c - 1 - bs));
        e.factors = coupling_factors(zs, level_vars(s + 1, cp.k[(size_t)s]), cp.c,
                                     bs + 1 - cp.c);
        state = constant_term(e, zs);
    }
    MultiLaurent lhs = state;

    /* RHS */
    int64_t sign_exp = 0, q_exp = 0;
    for (int s = 1; s <= cp.n; ++s) {
        const int64_t ks = cp.k[(size_t)s - 1], bs = cp.b[(size_t)s - 1];
        sign_exp += ks * (bs + 1 - cp.c);
        q_exp += ks * choose2(bs + 2 - cp.c);
    }
    QRat pre = QRat::q_power(q_exp);
    if (sign_exp % 2 != 0) pre = -pre;

    MultiLaurent rhs(pre);
    for (int s = 1; s <= cp.n; ++s)
        rhs = rhs.scaled(QRat(morris_product(
            {cp.k[(size_t)s - 1], cp.a + cp.sigma(s) + s * (1 - cp.c), cp.c - 1, cp.c})));
    for (const VarId& v : level_vars(cp.n + 1, cp.k[(size_t)cp.n]))
        rhs *= pochhammer(Monomial::var(v, -1),
                          cp.a + cp.sigma(cp.n) + cp.n * (1 - cp.c));
    for (int s = 1; s <= cp.n; ++s) {
        const int bs = cp.b[(size_t)s - 1];
        const int64_t head = cp.a + cp.sigma(s - 1) + (int64_t)(s - 1) * (1 - cp.c);
        Alphabet virt = geometric_difference(head, cp.c - bs - 1, cp.c);
        for (const Insertion& in : spec.at_level(s)) {
            if (variant == ChainVariant::GBasis) {
                rhs *= in.f.eval(virt + in.x, cp.c);
            } else {
                const Alphabet& y = in.y ? *in.y : unit_alphabet();
                rhs *= in.f.eval(virt * y + in.x, cp.c);
            }
        }
    }
    return compare(std::move(r), t0, lhs, rhs, sides);
}

}  // namespace qct
