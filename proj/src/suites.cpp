#include "qct/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdlib>
#include <initializer_list>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>
#include <utility>

#include "qct/qblocks.hpp"
#include "qct/symfun.hpp"
#include "qct/theorems.hpp"

namespace qct {

void RunSummary::count(const VerifyReport& r) {
    ++total;
    switch (r.status) {
        case Status::Pass: ++passed; break;
        case Status::Fail: ++failed; break;
        case Status::NoClaim: ++no_claim; break;
        case Status::BudgetExceeded: ++budget_exceeded; break;
        case Status::Error: ++errors; break;
    }
}

namespace {

int64_t now_ms() {
    using namespace std::chrono;
    return duration_cast<milliseconds>(steady_clock::now().time_since_epoch()).count();
}

using Params = std::vector<std::pair<std::string, std::string>>;

struct Point {
    Params params;  // for labeling aborted points; verifiers record their own
    std::function<VerifyReport()> run;
};
using Grid = std::vector<Point>;
using GridBuilder = Grid (*)(const RangeMap&);

struct Entry {
    IdentityInfo info;
    GridBuilder grid;
};

std::pair<int64_t, int64_t> range_of(const RangeMap& rm, const std::string& key,
                                     int64_t dlo, int64_t dhi) {
    auto it = rm.find(key);
    if (it == rm.end()) return {dlo, dhi};
    if (it->second.lo > it->second.hi)
        throw std::invalid_argument("empty range for parameter '" + key + "'");
    return {it->second.lo, it->second.hi};
}

std::string param_str(int v) { return std::to_string(v); }
std::string param_str(int64_t v) { return std::to_string(v); }
std::string param_str(std::string v) { return v; }
std::string param_str(const char* v) { return v; }

template <class K, class V, class... Rest>
void add_params(Params& p, K&& key, V&& v, Rest&&... rest) {
    p.emplace_back(std::string(std::forward<K>(key)), param_str(std::forward<V>(v)));
    if constexpr (sizeof...(rest) > 0) add_params(p, std::forward<Rest>(rest)...);
}
template <class... A>
Params params_of(A&&... a) {
    Params p;
    add_params(p, std::forward<A>(a)...);
    return p;
}

void conclude(VerifyReport& rep, const MultiLaurent& lhs, const MultiLaurent& rhs,
              int64_t t0) {
    if (lhs != rhs) {
        rep.status = Status::Fail;
        rep.lhs = lhs.to_string();
        rep.rhs = rhs.to_string();
    }
    rep.millis = now_ms() - t0;
}

/* ---------- small shared alphabets ---------- */

Alphabet letter_alphabet(const char* name) {
    return Alphabet::single(Monomial::var(free_var(name)));
}
Alphabet q_alphabet() { return Alphabet::single(Monomial::q(1)); }

Insertion g_insertion(const Partition& lam, Alphabet x) {
    return Insertion{SymFunc::g(lam), lam, std::move(x), std::nullopt};
}
Insertion p_insertion(SymFunc f, const Partition& shape, Alphabet x,
                      std::optional<Alphabet> y) {
    return Insertion{std::move(f), shape, std::move(x), std::move(y)};
}

/* ---------- the product-formula identity ---------- */

VerifyReport verify_q_morris(int k, int a, int b, int c) {
    VerifyReport rep;
    rep.identity = "q-morris";
    rep.set_param("k", k);
    rep.set_param("a", a);
    rep.set_param("b", b);
    rep.set_param("c", c);
    const int64_t t0 = now_ms();
    MorrisParams mp{k, a, b, c};
    MultiLaurent got = constant_term(build_morris_lhs(mp), level_vars(1, k));
    MultiLaurent want{QRat(morris_product(mp))};
    conclude(rep, got, want, t0);
    return rep;
}

Grid grid_q_morris(const RangeMap& rm) {
    auto [klo, khi] = range_of(rm, "k", 1, 3);
    auto [alo, ahi] = range_of(rm, "a", 0, 2);
    auto [blo, bhi] = range_of(rm, "b", 0, 2);
    auto [clo, chi] = range_of(rm, "c", 1, 2);
    Grid g;
    for (int64_t k = std::max<int64_t>(0, klo); k <= khi; ++k)
        for (int64_t a = std::max<int64_t>(0, alo); a <= ahi; ++a)
            for (int64_t b = std::max<int64_t>(0, blo); b <= bhi; ++b)
                for (int64_t c = std::max<int64_t>(0, clo); c <= chi; ++c) {
                    const int ki = (int)k, ai = (int)a, bi = (int)b, ci = (int)c;
                    g.push_back({params_of("k", k, "a", a, "b", b, "c", c),
                                 [=] { return verify_q_morris(ki, ai, bi, ci); }});
                }
    return g;
}

/* ---------- partial fractions ---------- */

Grid grid_splitting(const RangeMap& rm) {
    auto [nlo, nhi] = range_of(rm, "n", 1, 3);
    auto [clo, chi] = range_of(rm, "c", 1, 2);
    Grid g;
    for (int64_t n = std::max<int64_t>(1, nlo); n <= nhi; ++n)
        for (int64_t c = std::max<int64_t>(1, clo); c <= chi; ++c) {
            const int ni = (int)n, ci = (int)c;
            g.push_back({params_of("n", n, "c", c),
                         [=] { return verify_splitting(ni, ci); }});
        }
    return g;
}

/* ---------- index-shift identities ---------- */

Grid grid_poch_shift(const RangeMap& rm) {
    auto [ilo, ihi] = range_of(rm, "i", 1, 4);
    auto [jlo, jhi] = range_of(rm, "j", 1, 4);
    auto [tlo, thi] = range_of(rm, "t", -1, 4);
    Grid g;
    for (int64_t i = std::max<int64_t>(1, ilo); i <= ihi; ++i)
        for (int64_t j = std::max<int64_t>(1, jlo); j <= jhi; ++j)
            for (int64_t t = std::max<int64_t>(-1, tlo); t <= std::min(thi, j); ++t) {
                const int ii = (int)i, ji = (int)j, ti = (int)t;
                g.push_back({params_of("i", i, "j", j, "t", t),
                             [=] { return verify_pochhammer_shift(ii, ji, ti); }});
            }
    return g;
}

/* ---------- the vanishing lemma ---------- */

Grid grid_vanishing(const RangeMap& rm) {
    auto [k1lo, k1hi] = range_of(rm, "k1", 1, 3);
    auto [k2lo, k2hi] = range_of(rm, "k2", 0, 2);
    auto [clo, chi] = range_of(rm, "c", 1, 2);
    auto [tlo, thi] = range_of(rm, "t", -2, 3);
    Grid g;
    for (int64_t k1 = std::max<int64_t>(1, k1lo); k1 <= k1hi; ++k1)
        for (int64_t k2 = std::max<int64_t>(0, k2lo); k2 <= std::min(k2hi, k1 - 1); ++k2)
            for (int64_t c = std::max<int64_t>(1, clo); c <= chi; ++c) {
                /* all exponent vectors with entries in [tlo, thi] */
                std::vector<int> t((size_t)k1, (int)tlo);
                for (;;) {
                    const int k1i = (int)k1, k2i = (int)k2, ci = (int)c;
                    const std::vector<int> tv = t;
                    std::string tstr;
                    for (size_t u = 0; u < tv.size(); ++u)
                        tstr += (u ? "," : "") + std::to_string(tv[u]);
                    g.push_back({params_of("k1", k1, "k2", k2, "c", c, "t", tstr),
                                 [=] { return verify_vanishing(k1i, k2i, ci, tv); }});
                    size_t pos = 0;
                    while (pos < t.size() && t[pos] == (int)thi) t[pos++] = (int)tlo;
                    if (pos == t.size()) break;
                    ++t[pos];
                }
            }
    return g;
}

/* ---------- structure of the coupled constant term ---------- */

Grid grid_l_structure(const RangeMap& rm) {
    auto [k1lo, k1hi] = range_of(rm, "k1", 1, 3);
    auto [k2lo, k2hi] = range_of(rm, "k2", 0, 3);
    auto [alo, ahi] = range_of(rm, "a", 0, 2);
    auto [blo, bhi] = range_of(rm, "b", 0, 2);
    auto [clo, chi] = range_of(rm, "c", 1, 2);
    Grid g;
    for (int64_t k1 = std::max<int64_t>(1, k1lo); k1 <= k1hi; ++k1)
        for (int64_t k2 = std::max<int64_t>(0, k2lo); k2 <= std::min(k2hi, k1); ++k2)
            for (int64_t a = std::max<int64_t>(0, alo); a <= ahi; ++a)
                for (int64_t b = std::max<int64_t>(0, blo); b <= bhi; ++b)
                    for (int64_t c = std::max(b + 1, clo);
                         c <= std::min(chi, a + b + 1); ++c) {
                        LParams p{(int)k1, (int)k2, (int)a, (int)b, (int)c};
                        g.push_back({params_of("k1", k1, "k2", k2, "a", a, "b", b,
                                               "c", c),
                                     [=] { return verify_L_structure(p); }});
                    }
    return g;
}

/* ---------- boundary transfer family (b = c-1) ---------- */

struct BasePoint {
    int k1, k2, a, c;
};

std::vector<BasePoint> base_grid(const RangeMap& rm) {
    auto [k1lo, k1hi] = range_of(rm, "k1", 1, 3);
    auto [k2lo, k2hi] = range_of(rm, "k2", 0, 3);
    auto [alo, ahi] = range_of(rm, "a", 0, 2);
    auto [clo, chi] = range_of(rm, "c", 1, 2);
    std::vector<BasePoint> out;
    for (int64_t k1 = std::max<int64_t>(1, k1lo); k1 <= k1hi; ++k1)
        for (int64_t k2 = std::max<int64_t>(0, k2lo); k2 <= std::min(k2hi, k1); ++k2)
            for (int64_t a = std::max<int64_t>(0, alo); a <= ahi; ++a)
                for (int64_t c = std::max<int64_t>(1, clo); c <= chi; ++c)
                    out.push_back({(int)k1, (int)k2, (int)a, (int)c});
    return out;
}

Grid grid_transfer(const RangeMap& rm) {
    Grid g;
    for (const BasePoint& b : base_grid(rm))
        g.push_back({params_of("k1", b.k1, "k2", b.k2, "a", b.a, "c", b.c), [=] {
                         return verify_lemma_bc(b.k1, b.k2, b.a, b.c);
                     }});
    return g;
}

/* partitions of d in [dlo, dhi] with at most maxlen parts */
std::vector<Partition> shapes_in(int64_t dlo, int64_t dhi, int maxlen) {
    std::vector<Partition> out;
    for (int64_t d = std::max<int64_t>(0, dlo); d <= dhi; ++d)
        for (const Partition& lam : partitions_of((int)d))
            if (lam.length() <= maxlen) out.push_back(lam);
    return out;
}

Grid grid_transfer_h(const RangeMap& rm) {
    auto [dlo, dhi] = range_of(rm, "d", 0, 3);
    Grid g;
    for (const BasePoint& b : base_grid(rm))
        for (const Partition& lam : shapes_in(dlo, dhi, b.k1 - b.k2))
            g.push_back({params_of("k1", b.k1, "k2", b.k2, "a", b.a, "c", b.c,
                                   "lambda", lam.to_string()),
                         [=] { return verify_prop_h(b.k1, b.k2, b.a, b.c, lam); }});
    return g;
}

/* one-factor and two-factor g-certified insertion variants within budget */
std::vector<std::pair<std::string, LevelInsertions>> g_insertion_variants(
    int budget, int64_t dlo, int64_t dhi) {
    std::vector<std::pair<std::string, LevelInsertions>> out;
    const std::vector<std::pair<std::string, Alphabet>> xs = {
        {"0", Alphabet{}}, {"x", letter_alphabet("x")}, {"q", q_alphabet()}};
    for (const Partition& lam : shapes_in(std::max<int64_t>(1, dlo), dhi, budget))
        for (const auto& [xtag, x] : xs)
            out.emplace_back("g" + lam.to_string() + "+" + xtag,
                             LevelInsertions{g_insertion(lam, x)});
    if (budget >= 2 && dhi >= 2) {
        const Partition one{1};
        out.emplace_back("g(1)*g(1)",
                         LevelInsertions{g_insertion(one, Alphabet{}),
                                         g_insertion(one, Alphabet{})});
        out.emplace_back("g(1)+x*g(1)+q",
                         LevelInsertions{g_insertion(one, letter_alphabet("x")),
                                         g_insertion(one, q_alphabet())});
    }
    return out;
}

Grid grid_transfer_g(const RangeMap& rm) {
    auto [dlo, dhi] = range_of(rm, "d", 1, 2);
    Grid g;
    for (const BasePoint& b : base_grid(rm))
        for (const auto& [tag, ins] : g_insertion_variants(b.k1 - b.k2, dlo, dhi))
            g.push_back({params_of("k1", b.k1, "k2", b.k2, "a", b.a, "c", b.c, "f",
                                   tag),
                         [=] { return verify_thm2(b.k1, b.k2, b.a, b.c, ins); }});
    return g;
}

/* p-bounded insertion variants: f in {p_1, p_2, e_2, h_2}, scalings Y in
 * {default unit, letter y}, translations X in {empty, letter x} */
std::vector<std::pair<std::string, LevelInsertions>> p_insertion_variants(
    int budget) {
    std::vector<std::pair<std::string, LevelInsertions>> out;
    const std::vector<std::pair<std::string, SymFunc>> fs = {
        {"p(1)", SymFunc::p(Partition{1})},
        {"p(2)", SymFunc::p(Partition{2})},
        {"e2", SymFunc::e(2)},
        {"h2", SymFunc::h(2)}};
    const std::vector<std::pair<std::string, std::optional<Alphabet>>> ys = {
        {"1", std::nullopt}, {"y", letter_alphabet("y")}};
    const std::vector<std::pair<std::string, Alphabet>> xs = {
        {"0", Alphabet{}}, {"x", letter_alphabet("x")}};
    for (const auto& [ftag, f] : fs) {
        if (f.degree() > budget) continue;
        const Partition shape{(int)f.degree()};
        for (const auto& [ytag, y] : ys)
            for (const auto& [xtag, x] : xs)
                out.emplace_back(ftag + "*" + ytag + "+" + xtag,
                                 LevelInsertions{p_insertion(f, shape, x, y)});
    }
    return out;
}

Grid grid_transfer_p(const RangeMap& rm) {
    Grid g;
    for (const BasePoint& b : base_grid(rm))
        for (const auto& [tag, ins] : p_insertion_variants(b.k1 - b.k2))
            g.push_back({params_of("k1", b.k1, "k2", b.k2, "a", b.a, "c", b.c, "f",
                                   tag),
                         [=] { return verify_thm3(b.k1, b.k2, b.a, b.c, ins); }});
    return g;
}

/* ---------- general-b transfer family ---------- */

struct ShiftPoint {
    int k1, k2, a, b, c;
};

std::vector<ShiftPoint> shifted_grid(const RangeMap& rm) {
    auto [blo, bhi] = range_of(rm, "b", 0, 2);
    std::vector<ShiftPoint> out;
    for (const BasePoint& p : base_grid(rm))
        for (int64_t b = std::max<int64_t>(0, blo); b <= bhi; ++b)
            if (p.a + b + 1 >= p.c)
                out.push_back({p.k1, p.k2, p.a, (int)b, p.c});
    return out;
}

Grid grid_transfer_shifted(const RangeMap& rm) {
    Grid g;
    for (const ShiftPoint& p : shifted_grid(rm))
        g.push_back({params_of("k1", p.k1, "k2", p.k2, "a", p.a, "b", p.b, "c",
                               p.c),
                     [=] { return verify_lemma_bc2(p.k1, p.k2, p.a, p.b, p.c); }});
    return g;
}

Grid grid_transfer_h_shifted(const RangeMap& rm) {
    auto [dlo, dhi] = range_of(rm, "d", 0, 3);
    Grid g;
    for (const ShiftPoint& p : shifted_grid(rm))
        for (const Partition& lam : shapes_in(dlo, dhi, p.k1 - p.k2))
            g.push_back({params_of("k1", p.k1, "k2", p.k2, "a", p.a, "b", p.b, "c",
                                   p.c, "lambda", lam.to_string()),
                         [=] {
                             return verify_prop_h_equiv(p.k1, p.k2, p.a, p.b, p.c,
                                                        lam);
                         }});
    return g;
}

Grid grid_transfer_g_shifted(const RangeMap& rm) {
    auto [dlo, dhi] = range_of(rm, "d", 1, 2);
    Grid g;
    for (const ShiftPoint& p : shifted_grid(rm))
        for (const auto& [tag, ins] : g_insertion_variants(p.k1 - p.k2, dlo, dhi))
            g.push_back({params_of("k1", p.k1, "k2", p.k2, "a", p.a, "b", p.b, "c",
                                   p.c, "f", tag),
                         [=] {
                             return verify_inserted_equiv(p.k1, p.k2, p.a, p.b, p.c,
                                                          ins);
                         }});
    return g;
}

/* ---------- iterated chains ---------- */

const std::vector<std::vector<int>>& chain_ksets() {
    static const std::vector<std::vector<int>> ksets = {
        {1, 0}, {2, 0}, {2, 1, 0}, {2, 2, 0}};
    return ksets;
}

std::string kset_string(const std::vector<int>& k) {
    std::string s = "(";
    for (size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
    return s + ")";
}

bool staircase_ok(const ChainParams& cp) {
    for (int s = 1; s <= cp.n; ++s)
        if (cp.a + cp.sigma(s) + s < s * cp.c) return false;
    return true;
}

/* insertion specs exercised per chain point: the bare identity, plus one
 * small insertion at the first level whose budget admits it */
std::vector<std::pair<std::string, InsertionSpec>> chain_specs(
    const ChainParams& cp, ChainVariant variant) {
    std::vector<std::pair<std::string, InsertionSpec>> out;
    out.emplace_back("empty", InsertionSpec{});
    int lvl = 0;
    for (int s = 1; s <= cp.n; ++s)
        if (cp.k[(size_t)s - 1] - cp.k[(size_t)s] >= 1) {
            lvl = s;
            break;
        }
    if (lvl == 0) return out;
    InsertionSpec spec;
    spec.levels.resize((size_t)lvl);
    const Partition one{1};
    if (variant == ChainVariant::GBasis) {
        spec.levels.back().push_back(g_insertion(one, letter_alphabet("x")));
        out.emplace_back("g(1)+x@" + std::to_string(lvl), spec);
    } else {
        spec.levels.back().push_back(
            p_insertion(SymFunc::p(one), one, Alphabet{}, letter_alphabet("y")));
        out.emplace_back("p(1)*y@" + std::to_string(lvl), spec);
    }
    return out;
}

Grid grid_chain(const RangeMap& rm, ChainVariant variant) {
    auto [klo, khi] = range_of(rm, "kset", 0, (int64_t)chain_ksets().size() - 1);
    auto [alo, ahi] = range_of(rm, "a", 0, 2);
    auto [blo, bhi] = range_of(rm, "b", 0, 2);
    auto [clo, chi] = range_of(rm, "c", 1, 2);
    Grid g;
    for (int64_t ks = std::max<int64_t>(0, klo);
         ks <= std::min<int64_t>(khi, (int64_t)chain_ksets().size() - 1); ++ks) {
        const std::vector<int>& kvec = chain_ksets()[(size_t)ks];
        const int n = (int)kvec.size() - 1;
        for (int64_t a = std::max<int64_t>(0, alo); a <= ahi; ++a)
            for (int64_t c = std::max<int64_t>(1, clo); c <= chi; ++c) {
                std::vector<int> b((size_t)n, (int)std::max<int64_t>(0, blo));
                for (;;) {
                    ChainParams cp{n, kvec, (int)a, b, (int)c};
                    if (staircase_ok(cp)) {
                        std::string bstr;
                        for (size_t u = 0; u < b.size(); ++u)
                            bstr += (u ? "," : "") + std::to_string(b[u]);
                        for (auto& [tag, spec] : chain_specs(cp, variant))
                            g.push_back(
                                {params_of("kset", kset_string(kvec), "a", a, "b",
                                           bstr, "c", c, "f", tag),
                                 [cp, spec = spec, variant] {
                                     return verify_thm_chain(cp, spec, variant,
                                                             ChainNorm::General);
                                 }});
                    }
                    size_t pos = 0;
                    while (pos < b.size() && b[pos] == (int)bhi)
                        b[pos++] = (int)std::max<int64_t>(0, blo);
                    if (pos == b.size()) break;
                    ++b[pos];
                }
            }
    }
    return g;
}

Grid grid_chain_g(const RangeMap& rm) { return grid_chain(rm, ChainVariant::GBasis); }
Grid grid_chain_p(const RangeMap& rm) { return grid_chain(rm, ChainVariant::PBasis); }

/* ---------- boundary/general agreement ---------- */

VerifyReport eq_report(const std::string& pair, const Params& base) {
    VerifyReport rep;
    rep.identity = "equivalence";
    rep.set_param("pair", pair);
    for (const auto& [k, v] : base) rep.set_param(k, v);
    return rep;
}

void eq_conclude(VerifyReport& rep, const VerifyReport& general,
                 const VerifyReport& boundary, const MultiLaurent& glhs,
                 const MultiLaurent& blhs, const MultiLaurent& grhs,
                 const MultiLaurent& brhs, int64_t t0) {
    if (general.status != Status::Pass) {
        rep.status = Status::Fail;
        rep.detail = "general-b side: " + status_name(general.status) +
                     (general.detail.empty() ? "" : " (" + general.detail + ")");
    } else if (boundary.status != Status::Pass) {
        rep.status = Status::Fail;
        rep.detail = "boundary side: " + status_name(boundary.status) +
                     (boundary.detail.empty() ? "" : " (" + boundary.detail + ")");
    } else if (glhs != blhs) {
        rep.status = Status::Fail;
        rep.detail = "left-hand sides differ";
        rep.lhs = glhs.to_string();
        rep.rhs = blhs.to_string();
    } else if (grhs != brhs) {
        rep.status = Status::Fail;
        rep.detail = "right-hand sides differ";
        rep.lhs = grhs.to_string();
        rep.rhs = brhs.to_string();
    }
    rep.millis = now_ms() - t0;
}

VerifyReport eq_boundary_pair(int k1, int k2, int a, int c) {
    VerifyReport rep =
        eq_report("bare", params_of("k1", k1, "k2", k2, "a", a, "c", c));
    const int64_t t0 = now_ms();
    Sides s5, s6;
    VerifyReport r5 = verify_lemma_bc(k1, k2, a, c, &s5);
    VerifyReport r6 = verify_lemma_bc2(k1, k2, a, c - 1, c, &s6);
    eq_conclude(rep, r6, r5, s6.lhs, s5.lhs, s6.rhs, s5.rhs, t0);
    return rep;
}

VerifyReport eq_inserted_pair(int k1, int k2, int a, int c, const Partition& lam) {
    VerifyReport rep = eq_report("inserted", params_of("k1", k1, "k2", k2, "a", a,
                                                       "c", c, "lambda",
                                                       lam.to_string()));
    const int64_t t0 = now_ms();
    Sides s5, s6;
    VerifyReport r5 = verify_prop_h(k1, k2, a, c, lam, &s5);
    VerifyReport r6 = verify_prop_h_equiv(k1, k2, a, c - 1, c, lam, &s6);
    eq_conclude(rep, r6, r5, s6.lhs, s5.lhs, s6.rhs, s5.rhs, t0);
    return rep;
}

/* the z0 = 1 general-b transfer against the generic-z0 one specialized */
VerifyReport eq_transfer_pair(int k1, int k2, int a, int c,
                              const std::string& tag, const LevelInsertions& ins) {
    VerifyReport rep = eq_report(
        "transfer", params_of("k1", k1, "k2", k2, "a", a, "c", c, "f", tag));
    const int64_t t0 = now_ms();
    Sides sg, sb;
    VerifyReport rg = verify_thm2(k1, k2, a, c, ins, &sg);
    VerifyReport rb = verify_inserted_equiv(k1, k2, a, c - 1, c, ins, &sb);
    const MultiLaurent glhs = sg.lhs.substitute(z0(), QRat(1L), Monomial());
    const MultiLaurent grhs = sg.rhs.substitute(z0(), QRat(1L), Monomial());
    eq_conclude(rep, rb, rg, sb.lhs, glhs, sb.rhs, grhs, t0);
    return rep;
}

/* the right side of the collapsed chain, assembled from scratch: a product
 * of closed Morris values, trailing rows in the last level, and insertion
 * values on the virtual alphabet (q^a - 1)/(1 - q^c) */
MultiLaurent chain_rhs_direct(const ChainParams& cp, const InsertionSpec& spec,
                              ChainVariant variant) {
    QRat scale(1L);
    for (int s = 1; s <= cp.n; ++s)
        scale *= QRat(morris_product(
            MorrisParams{cp.k[(size_t)s - 1], cp.a, cp.c - 1, cp.c}));
    MultiLaurent rhs{scale};
    for (VarId v : level_vars(cp.n + 1, cp.k[(size_t)cp.n]))
        rhs *= pochhammer(Monomial::var(v, -1), cp.a);
    const Alphabet base = geometric_difference(cp.a, 0, cp.c);
    for (int s = 1; s <= cp.n; ++s)
        for (const Insertion& ins : spec.at_level(s)) {
            Alphabet alpha = base;
            if (variant == ChainVariant::PBasis)
                alpha = alpha * (ins.y ? *ins.y : Alphabet::single(Monomial()));
            alpha = alpha + ins.x;
            rhs *= ins.f.eval(alpha, cp.c);
        }
    return rhs;
}

VerifyReport eq_chain_pair(int kset, int a, int c, ChainVariant variant) {
    const std::vector<int>& kvec = chain_ksets()[(size_t)kset];
    const int n = (int)kvec.size() - 1;
    ChainParams cp{n, kvec, a, std::vector<int>((size_t)n, c - 1), c};
    auto specs = chain_specs(cp, variant);
    const auto& [tag, spec] = specs.back();  // richest available spec
    VerifyReport rep = eq_report(
        variant == ChainVariant::GBasis ? "chain-g" : "chain-p",
        params_of("kset", kset_string(kvec), "a", (int64_t)a, "c", (int64_t)c, "f",
                  tag));
    const int64_t t0 = now_ms();
    Sides s;
    VerifyReport r =
        verify_thm_chain(cp, spec, variant, ChainNorm::Collapsed, &s);
    if (r.status != Status::Pass) {
        rep.status = Status::Fail;
        rep.detail = "chain run: " + status_name(r.status) +
                     (r.detail.empty() ? "" : " (" + r.detail + ")");
    } else {
        const MultiLaurent direct = chain_rhs_direct(cp, spec, variant);
        if (s.rhs != direct) {
            rep.status = Status::Fail;
            rep.detail = "chain right side differs from directly assembled product";
            rep.lhs = s.rhs.to_string();
            rep.rhs = direct.to_string();
        }
    }
    rep.millis = now_ms() - t0;
    return rep;
}

Grid grid_equivalence(const RangeMap& rm) {
    auto [dlo, dhi] = range_of(rm, "d", 1, 2);
    Grid g;
    for (const BasePoint& b : base_grid(rm)) {
        g.push_back({params_of("pair", std::string("bare"), "k1", b.k1, "k2", b.k2,
                               "a", b.a, "c", b.c),
                     [=] { return eq_boundary_pair(b.k1, b.k2, b.a, b.c); }});
        for (const Partition& lam : shapes_in(dlo, dhi, b.k1 - b.k2))
            g.push_back({params_of("pair", std::string("inserted"), "k1", b.k1,
                                   "k2", b.k2, "a", b.a, "c", b.c, "lambda",
                                   lam.to_string()),
                         [=] {
                             return eq_inserted_pair(b.k1, b.k2, b.a, b.c, lam);
                         }});
        if (b.k1 - b.k2 >= 1) {
            const Partition one{1};
            for (const auto& [tag, x] :
                 std::vector<std::pair<std::string, Alphabet>>{
                     {"g(1)+0", Alphabet{}}, {"g(1)+x", letter_alphabet("x")}}) {
                LevelInsertions ins{g_insertion(one, x)};
                g.push_back({params_of("pair", std::string("transfer"), "k1", b.k1,
                                       "k2", b.k2, "a", b.a, "c", b.c, "f", tag),
                             [=] {
                                 return eq_transfer_pair(b.k1, b.k2, b.a, b.c, tag,
                                                         ins);
                             }});
            }
        }
    }
    auto [alo, ahi] = range_of(rm, "a", 0, 2);
    auto [clo, chi] = range_of(rm, "c", 1, 2);
    auto [klo, khi] = range_of(rm, "kset", 0, (int64_t)chain_ksets().size() - 1);
    for (int64_t ks = std::max<int64_t>(0, klo);
         ks <= std::min<int64_t>(khi, (int64_t)chain_ksets().size() - 1); ++ks)
        for (int64_t a = std::max<int64_t>(0, alo); a <= ahi; ++a)
            for (int64_t c = std::max<int64_t>(1, clo); c <= chi; ++c)
                for (ChainVariant variant :
                     {ChainVariant::GBasis, ChainVariant::PBasis}) {
                    const int ksi = (int)ks, ai = (int)a, ci = (int)c;
                    g.push_back(
                        {params_of("pair",
                                   std::string(variant == ChainVariant::GBasis
                                                   ? "chain-g"
                                                   : "chain-p"),
                                   "kset", kset_string(chain_ksets()[(size_t)ks]),
                                   "a", a, "c", c),
                         [=] { return eq_chain_pair(ksi, ai, ci, variant); }});
                }
    return g;
}

/* ---------- plethystic calculus laws ---------- */

VerifyReport pleth_report(const std::string& law, const Params& ps) {
    VerifyReport rep;
    rep.identity = "plethysm";
    rep.set_param("law", law);
    for (const auto& [k, v] : ps) rep.set_param(k, v);
    return rep;
}

std::vector<std::pair<std::string, Alphabet>> pleth_alphabets() {
    Alphabet uv;
    uv.add_letter(Monomial::var(free_var("u")));
    uv.add_letter(Monomial::var(free_var("v")));
    Alphabet mixed = geometric_difference(2, 0, 1) + letter_alphabet("u");
    return {{"u", letter_alphabet("u")},
            {"u+v", uv},
            {"geom", geometric_difference(3, 0, 2)},
            {"mixed", mixed}};
}

VerifyReport pleth_h_sum(int r, const std::string& xtag, const Alphabet& x,
                         const std::string& ytag, const Alphabet& y) {
    VerifyReport rep = pleth_report(
        "h-sum", params_of("r", (int64_t)r, "X", xtag, "Y", ytag));
    const int64_t t0 = now_ms();
    MultiLaurent lhs = h_eval(r, x + y);
    MultiLaurent rhs;
    for (int i = 0; i <= r; ++i) rhs += h_eval(i, x) * h_eval(r - i, y);
    conclude(rep, lhs, rhs, t0);
    return rep;
}

VerifyReport pleth_g_sum(int r, int c, const std::string& xtag, const Alphabet& x,
                         const std::string& ytag, const Alphabet& y) {
    VerifyReport rep = pleth_report(
        "g-sum", params_of("r", (int64_t)r, "c", (int64_t)c, "X", xtag, "Y", ytag));
    const int64_t t0 = now_ms();
    MultiLaurent lhs = g_eval(r, x + y, c);
    MultiLaurent rhs;
    for (int i = 0; i <= r; ++i) rhs += g_eval(i, x, c) * g_eval(r - i, y, c);
    conclude(rep, lhs, rhs, t0);
    return rep;
}

VerifyReport pleth_h_negate(int r, const std::string& xtag, const Alphabet& x) {
    VerifyReport rep =
        pleth_report("h-negate", params_of("r", (int64_t)r, "X", xtag));
    const int64_t t0 = now_ms();
    MultiLaurent lhs = h_eval(r, x.negated());
    MultiLaurent rhs = e_eval(r, x);
    if (r % 2) rhs = -rhs;
    conclude(rep, lhs, rhs, t0);
    return rep;
}

VerifyReport pleth_p_bilinear(int r) {
    VerifyReport rep = pleth_report("p-bilinear", params_of("r", (int64_t)r));
    const int64_t t0 = now_ms();
    const Alphabet x = geometric_difference(2, 0, 1);
    const Alphabet y = geometric_difference(3, 1, 2) + letter_alphabet("u");
    if (p_eval(r, x + y) != p_eval(r, x) + p_eval(r, y)) {
        rep.status = Status::Fail;
        rep.detail = "sum moment rule";
    } else if (p_eval(r, x * y) != p_eval(r, x) * p_eval(r, y)) {
        rep.status = Status::Fail;
        rep.detail = "product moment rule";
    } else if (p_eval(r, x.g_transformed(2)) !=
               p_eval(r, x) *
                   MultiLaurent(QRat(QPoly(1L) - QPoly::q_power(2 * r)) /
                                QRat(QPoly(1L) - QPoly::q_power(r)))) {
        rep.status = Status::Fail;
        rep.detail = "geometric transform rule";
    }
    rep.millis = now_ms() - t0;
    return rep;
}

VerifyReport pleth_h_binomial(int a, int r) {
    VerifyReport rep =
        pleth_report("h-binomial", params_of("a", (int64_t)a, "r", (int64_t)r));
    const int64_t t0 = now_ms();
    QRat closed = QRat(q_binomial(a, r) * QPoly::q_power(choose2(r)));
    if (r % 2) closed = -closed;
    const MultiLaurent want{closed};
    const MultiLaurent viah = h_eval(r, geometric_difference(a, 0, 1));
    if (viah != want) {
        rep.status = Status::Fail;
        rep.detail = "h-route disagrees with the closed form";
        rep.lhs = viah.to_string();
        rep.rhs = want.to_string();
    } else {
        for (int c = 1; c <= 2 && rep.status == Status::Pass; ++c) {
            const MultiLaurent viag =
                g_eval(r, geometric_difference(a, 0, c), c);
            if (viag != want) {
                rep.status = Status::Fail;
                rep.detail = "g-route disagrees at c=" + std::to_string(c);
                rep.lhs = viag.to_string();
                rep.rhs = want.to_string();
            }
        }
    }
    rep.millis = now_ms() - t0;
    return rep;
}

VerifyReport pleth_determinant(int n, const std::string& xtag, const Alphabet& x) {
    VerifyReport rep =
        pleth_report("p-determinant", params_of("n", (int64_t)n, "X", xtag));
    const int64_t t0 = now_ms();
    conclude(rep, p_from_h_determinant(n, x), p_eval(n, x), t0);
    return rep;
}

VerifyReport pleth_homogeneity(int r) {
    VerifyReport rep = pleth_report("homogeneity", params_of("r", (int64_t)r));
    const int64_t t0 = now_ms();
    Alphabet x;
    x.add_letter(Monomial::var(free_var("u")));
    x.add_letter(Monomial::var(free_var("v")), QRat(QPoly::q_power(1)));
    const Monomial m = Monomial::q(2) * Monomial::var(free_var("w"));
    if (p_eval(r, x.scaled(m)) != p_eval(r, x).mono_mul(m.pow(r))) {
        rep.status = Status::Fail;
        rep.detail = "power-sum scaling";
    } else if (h_eval(r, x.scaled(m)) != h_eval(r, x).mono_mul(m.pow(r))) {
        rep.status = Status::Fail;
        rep.detail = "complete-homogeneous scaling";
    } else if (e_eval(r, x.scaled(m)) != e_eval(r, x).mono_mul(m.pow(r))) {
        rep.status = Status::Fail;
        rep.detail = "elementary scaling";
    }
    rep.millis = now_ms() - t0;
    return rep;
}

VerifyReport pleth_dominance(int d) {
    VerifyReport rep = pleth_report("dominance", params_of("d", (int64_t)d));
    const int64_t t0 = now_ms();
    const std::vector<Partition> all = partitions_of(d);
    std::string bad;
    const Partition top = d > 0 ? Partition{std::vector<int>{d}} : Partition{};
    const Partition bot =
        d > 0 ? Partition{std::vector<int>(static_cast<size_t>(d), 1)}
              : Partition{};
    for (const Partition& lam : all) {
        if (!dominance_leq(lam, lam)) bad = "reflexivity at " + lam.to_string();
        if (!dominance_leq(lam, top)) bad = "top bound at " + lam.to_string();
        if (!dominance_leq(bot, lam)) bad = "bottom bound at " + lam.to_string();
    }
    for (const Partition& lam : all)
        for (const Partition& mu : all) {
            if (dominance_leq(lam, mu) && dominance_leq(mu, lam) && lam != mu)
                bad = "antisymmetry at " + lam.to_string() + "," + mu.to_string();
            for (const Partition& nu : all)
                if (dominance_leq(lam, mu) && dominance_leq(mu, nu) &&
                    !dominance_leq(lam, nu))
                    bad = "transitivity at " + lam.to_string() + "," +
                          mu.to_string() + "," + nu.to_string();
        }
    if (!bad.empty()) {
        rep.status = Status::Fail;
        rep.detail = bad;
    }
    rep.millis = now_ms() - t0;
    return rep;
}

Grid grid_plethysm(const RangeMap& rm) {
    auto [rlo, rhi] = range_of(rm, "r", 0, 4);
    auto [alo, ahi] = range_of(rm, "a", 0, 5);
    auto [nlo, nhi] = range_of(rm, "n", 1, 5);
    auto [ddlo, ddhi] = range_of(rm, "d", 5, 5);
    Grid g;
    const auto alphas = pleth_alphabets();
    for (int64_t r = std::max<int64_t>(0, rlo); r <= rhi; ++r) {
        const int ri = (int)r;
        for (size_t xi = 0; xi < alphas.size(); ++xi) {
            const auto& [xtag, x] = alphas[xi];
            g.push_back({params_of("law", std::string("h-negate"), "r", r, "X",
                                   xtag),
                         [=] { return pleth_h_negate(ri, xtag, x); }});
            for (size_t yi = xi; yi < alphas.size(); ++yi) {
                const auto& [ytag, y] = alphas[yi];
                g.push_back({params_of("law", std::string("h-sum"), "r", r, "X",
                                       xtag, "Y", ytag),
                             [=] { return pleth_h_sum(ri, xtag, x, ytag, y); }});
                for (int c = 1; c <= 2; ++c)
                    g.push_back({params_of("law", std::string("g-sum"), "r", r,
                                           "c", (int64_t)c, "X", xtag, "Y", ytag),
                                 [=] {
                                     return pleth_g_sum(ri, c, xtag, x, ytag, y);
                                 }});
            }
        }
        if (r >= 1) {
            g.push_back({params_of("law", std::string("p-bilinear"), "r", r),
                         [=] { return pleth_p_bilinear(ri); }});
            g.push_back({params_of("law", std::string("homogeneity"), "r", r),
                         [=] { return pleth_homogeneity(ri); }});
        }
    }
    for (int64_t a = std::max<int64_t>(0, alo); a <= ahi; ++a)
        for (int64_t r = 0; r <= 5; ++r) {
            const int ai = (int)a, ri = (int)r;
            g.push_back({params_of("law", std::string("h-binomial"), "a", a, "r",
                                   r),
                         [=] { return pleth_h_binomial(ai, ri); }});
        }
    for (int64_t n = std::max<int64_t>(1, nlo); n <= nhi; ++n) {
        const int ni = (int)n;
        for (const auto& [xtag, x] : alphas)
            g.push_back({params_of("law", std::string("p-determinant"), "n", n,
                                   "X", xtag),
                         [=] { return pleth_determinant(ni, xtag, x); }});
    }
    for (int64_t d = std::max<int64_t>(0, ddlo); d <= std::min<int64_t>(ddhi, 8);
         ++d) {
        const int di = (int)d;
        g.push_back({params_of("law", std::string("dominance"), "d", d),
                     [=] { return pleth_dominance(di); }});
    }
    return g;
}

/* ---------- randomized agreement of the extraction routes ---------- */

VerifyReport verify_ct_oracle(int inst) {
    VerifyReport rep;
    rep.identity = "ct-oracle";
    rep.set_param("i", inst);
    const int64_t t0 = now_ms();

    std::mt19937 rng(1234567u + (uint32_t)inst * 7919u);
    auto draw = [&rng](int lo, int hi) {
        return lo + (int)(rng() % (uint32_t)(hi - lo + 1));
    };
    const int n = draw(1, 3);
    const int c = draw(1, 2);
    rep.set_param("n", n);
    rep.set_param("c", c);

    const std::vector<VarId> y = level_vars(1, n);
    const VarId w = free_var("w");

    /* random multiplier with a few mixed-sign Laurent terms */
    MultiLaurent extra;
    const int nterms = draw(1, 3);
    for (int t = 0; t < nterms; ++t) {
        Monomial m = Monomial::q(draw(-2, 2));
        for (VarId v : y) m *= Monomial::var(v, draw(-1, 1));
        m *= Monomial::var(w, draw(-1, 1));
        int coeff = draw(-2, 2);
        if (coeff == 0) coeff = 1;
        extra += MultiLaurent::term(QRat((long)coeff), m);
    }
    if (extra.is_zero()) extra = MultiLaurent(1L);

    SeriesExpr e;
    e.numerator = vandermonde_block(y, c) * extra;
    e.factors = coupling_factors(y, {w}, c);

    const MultiLaurent direct = constant_term(e, y);
    const MultiLaurent split = ct_via_splitting(e, y);
    if (direct != split) {
        rep.status = Status::Fail;
        rep.detail = "partial-fraction route disagrees";
        rep.lhs = direct.to_string();
        rep.rhs = split.to_string();
        rep.millis = now_ms() - t0;
        return rep;
    }
    std::vector<int64_t> caps = truncation_bounds(e, y);
    const MultiLaurent expanded = ct_by_expansion(e, y, caps);
    if (direct != expanded) {
        rep.status = Status::Fail;
        rep.detail = "series expansion at the derived caps disagrees";
        rep.lhs = direct.to_string();
        rep.rhs = expanded.to_string();
        rep.millis = now_ms() - t0;
        return rep;
    }
    for (int64_t& cap : caps) ++cap;
    const MultiLaurent padded = ct_by_expansion(e, y, caps);
    if (direct != padded) {
        rep.status = Status::Fail;
        rep.detail = "series expansion at caps+1 disagrees";
        rep.lhs = direct.to_string();
        rep.rhs = padded.to_string();
    }
    rep.millis = now_ms() - t0;
    return rep;
}

Grid grid_ct_oracle(const RangeMap& rm) {
    auto [ilo, ihi] = range_of(rm, "i", 1, 50);
    Grid g;
    for (int64_t i = std::max<int64_t>(1, ilo); i <= ihi; ++i) {
        const int ii = (int)i;
        g.push_back({params_of("i", i), [=] { return verify_ct_oracle(ii); }});
    }
    return g;
}

/* ---------- registry ---------- */

const std::vector<Entry>& registry() {
    static const std::vector<Entry> entries = {
        {{"q-morris",
          "constant term in z[1,*] of prod_i (z0/z[1,i])_a (q z[1,i]/z0)_b times "
          "the pairwise block prod_{i<j} (z[1,i]/z[1,j])_c (q z[1,j]/z[1,i])_c "
          "equals the closed q-factorial product M_k(a,b,c)",
          {"k", "a", "b", "c"}},
         grid_q_morris},
        {{"splitting",
          "partial-fraction decomposition of the pairwise numerator against "
          "prod_{l,u} (1 - q^u y_l/w): the pole coefficients recombine to the "
          "numerator and each one equals its residue by exact division",
          {"n", "c"}},
         grid_splitting},
        {{"poch-shift",
          "the two index-shift identities that rebalance (1/y)_i (q y)_j and "
          "(y)_j (q/y)_i across a split point t",
          {"i", "j", "t"}},
         grid_poch_shift},
        {{"vanishing",
          "the coupled constant term of a monomial times the pairwise block "
          "vanishes whenever the exponent multiset satisfies the positivity "
          "hypothesis",
          {"k1", "k2", "c", "t"}},
         grid_vanishing},
        {{"l-structure",
          "polynomiality, z0-degree bound, root set, constant coefficient and "
          "exact prefactor divisibility of the coupled-kernel constant term",
          {"k1", "k2", "a", "b", "c"}},
         grid_l_structure},
        {{"transfer",
          "at b = c-1 the coupled constant term collapses to M_{k1}(a,c-1,c) "
          "times the trailing rows prod_j (z0/z[2,j])_a",
          {"k1", "k2", "a", "c"}},
         grid_transfer},
        {{"transfer-h",
          "the b = c-1 transfer with one inserted factor g_lam(z[1,*]; q, q^c) "
          "z0^{-|lam|}, whose value on the right is the scalar "
          "h_lam[(q^a - 1)/(1 - q)]",
          {"k1", "k2", "a", "c", "d"}},
         grid_transfer_h},
        {{"transfer-g",
          "the b = c-1 transfer with g-expressible factors f_i[Z + X_i]: on the "
          "right each alphabet becomes (q^a - 1)/(1 - q^c) + X_i/z0",
          {"k1", "k2", "a", "c", "d"}},
         grid_transfer_g},
        {{"transfer-p",
          "the b = c-1 transfer with size-bounded factors f_i[Y_i Z + X_i]: on "
          "the right Z becomes (q^a - 1)/(1 - q^c) Y_i + X_i/z0",
          {"k1", "k2", "a", "c"}},
         grid_transfer_p},
        {{"transfer-shifted",
          "the general-b transfer: the normalized shifted-coupling kernel equals "
          "a sign and q-power prefactor times M_{k1}(a+b+1-c, c-1, c) and the "
          "trailing rows of order a+b+1-c",
          {"k1", "k2", "a", "b", "c"}},
         grid_transfer_shifted},
        {{"transfer-h-shifted",
          "the general-b transfer with one inserted g_lam factor, whose value on "
          "the right is the scalar h_lam[(q^a - q^{c-b-1})/(1 - q)]",
          {"k1", "k2", "a", "b", "c", "d"}},
         grid_transfer_h_shifted},
        {{"transfer-g-shifted",
          "the general-b transfer at z0 = 1 with g-expressible factors; on the "
          "right each alphabet becomes (q^a - q^{c-b-1})/(1 - q^c) + X_i",
          {"k1", "k2", "a", "b", "c", "d"}},
         grid_transfer_g_shifted},
        {{"chain-g",
          "the n-level iterated transfer at z0 = 1 with g-expressible insertions "
          "per level; the empty insertion list is the bare product identity",
          {"kset", "a", "b", "c"}},
         grid_chain_g},
        {{"chain-p",
          "the n-level iterated transfer with scaled insertions f[Y Z + X] under "
          "per-level size budgets",
          {"kset", "a", "b", "c"}},
         grid_chain_p},
        {{"equivalence",
          "general-b statements specialized at b = c-1 agree side by side with "
          "their boundary counterparts, including a chain right side assembled "
          "independently from closed products",
          {"k1", "k2", "a", "c", "d", "kset"}},
         grid_equivalence},
        {{"plethysm",
          "calculus of alphabet moments: sum and negation rules, the g-family "
          "convolution, the h-to-p determinant, homogeneity, the geometric "
          "binomial evaluation h_r[(q^a-1)/(1-q)] and dominance-order sanity",
          {"r", "a", "n", "d"}},
         grid_plethysm},
        {{"ct-oracle",
          "three extraction routes (direct elimination, series expansion at the "
          "derived caps and at caps+1, partial fractions) agree on randomized "
          "coupled instances",
          {"i"}},
         grid_ct_oracle}};
    return entries;
}

const Entry* find_entry(const std::string& name) {
    for (const Entry& e : registry())
        if (e.info.name == name) return &e;
    return nullptr;
}

VerifyReport run_point(const std::string& identity, const Point& pt,
                       size_t budget) {
    const int64_t t0 = now_ms();
    try {
        BudgetScope scope(budget);
        return pt.run();
    } catch (const BudgetExceeded&) {
        VerifyReport r;
        r.identity = identity;
        r.params = pt.params;
        r.status = Status::BudgetExceeded;
        r.detail = "term budget exhausted";
        r.millis = now_ms() - t0;
        return r;
    } catch (const std::exception& ex) {
        VerifyReport r;
        r.identity = identity;
        r.params = pt.params;
        r.status = Status::Error;
        r.detail = ex.what();
        r.millis = now_ms() - t0;
        return r;
    }
}

}  // namespace

const std::vector<IdentityInfo>& list_identities() {
    static const std::vector<IdentityInfo> infos = [] {
        std::vector<IdentityInfo> v;
        for (const Entry& e : registry()) v.push_back(e.info);
        return v;
    }();
    return infos;
}

bool identity_known(const std::string& name) { return find_entry(name) != nullptr; }

RunSummary run_identity(const std::string& name, const RunOptions& opt) {
    const Entry* entry = find_entry(name);
    if (!entry) throw std::invalid_argument("unknown identity '" + name + "'");
    for (const auto& [key, rng] : opt.overrides) {
        if (std::find(entry->info.param_names.begin(),
                      entry->info.param_names.end(),
                      key) == entry->info.param_names.end())
            throw std::invalid_argument("identity '" + name +
                                        "' has no parameter '" + key + "'");
        if (rng.lo > rng.hi)
            throw std::invalid_argument("empty range for parameter '" + key + "'");
    }
    const Grid grid = entry->grid(opt.overrides);
    RunSummary sum;

    const int jobs =
        (int)std::min<size_t>((size_t)std::max(1, opt.jobs), std::max<size_t>(1, grid.size()));
    if (jobs <= 1) {
        for (const Point& pt : grid) {
            VerifyReport r = run_point(name, pt, opt.budget);
            sum.count(r);
            if (opt.sink) opt.sink(r);
        }
        return sum;
    }

    std::vector<VerifyReport> results(grid.size());
    std::vector<char> ready(grid.size(), 0);
    std::mutex mu;
    std::condition_variable cv;
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= grid.size()) return;
            VerifyReport r = run_point(name, grid[i], opt.budget);
            {
                std::lock_guard<std::mutex> lk(mu);
                results[i] = std::move(r);
                ready[i] = 1;
            }
            cv.notify_all();
        }
    };
    std::vector<std::thread> pool;
    pool.reserve((size_t)jobs);
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    {
        std::unique_lock<std::mutex> lk(mu);
        for (size_t i = 0; i < grid.size(); ++i) {
            cv.wait(lk, [&] { return ready[i] != 0; });
            sum.count(results[i]);
            if (opt.sink) opt.sink(results[i]);
        }
    }
    for (std::thread& t : pool) t.join();
    return sum;
}

}  // namespace qct
