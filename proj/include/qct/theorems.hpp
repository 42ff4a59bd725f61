#pragma once

#include <optional>
#include <vector>

#include "qct/qblocks.hpp"
#include "qct/symfun.hpp"

namespace qct {

/* One inserted symmetric-function factor f[A]: f is a finite homogeneous
 * basis expansion of degree |shape|; shape carries the budget data (length
 * for g-basis statements, size for p-basis ones); x translates and the
 * optional y scales the letter alphabet. */
struct Insertion {
    SymFunc f;
    Partition shape;
    Alphabet x;
    std::optional<Alphabet> y;  // p-basis variants only; absent means {1}
};

using LevelInsertions = std::vector<Insertion>;

struct InsertionSpec {
    std::vector<LevelInsertions> levels;  // entry s-1 feeds level s

    const LevelInsertions& at_level(int s) const {
        static const LevelInsertions none;
        return s <= (int)levels.size() ? levels[(size_t)s - 1] : none;
    }
};

/* canonical values of both sides, for cross-identity comparison suites */
struct Sides {
    MultiLaurent lhs, rhs;
};

/* CT of the coupled Morris kernel at b = c-1 equals the closed product
 * times the trailing (z0/z_j^(2))_a row */
VerifyReport verify_lemma_bc(int k1, int k2, int a, int c, Sides* sides = nullptr);

/* same kernel with g_lam(z^(1); q, q^c) * z0^{-|lam|} inserted; the RHS
 * picks up the scalar h_lam[(q^a - 1)/(1 - q)] */
VerifyReport verify_prop_h(int k1, int k2, int a, int c, const Partition& lam,
                           Sides* sides = nullptr);

/* g-certified insertions f_i[Z^(1) + X_i] against RHS alphabets
 * (q^a - 1)/(1 - q^c) + X_i/z0 */
VerifyReport verify_thm2(int k1, int k2, int a, int c, const LevelInsertions& ins,
                         Sides* sides = nullptr);

/* p-basis insertions f_i[Y_i Z^(1) + X_i] against RHS alphabets
 * (q^a - 1)/(1 - q^c) Y_i + X_i/z0; budget is on sizes */
VerifyReport verify_thm3(int k1, int k2, int a, int c, const LevelInsertions& ins,
                         Sides* sides = nullptr);

/* general-b form: the normalized kernel with shifted coupling equals the
 * sign/q-power prefactor times M_{k1}(a+b+1-c, c-1, c) and the trailing
 * (z0/z_j^(2))_{a+b+1-c} row */
VerifyReport verify_lemma_bc2(int k1, int k2, int a, int b, int c,
                              Sides* sides = nullptr);

/* general-b form with g_lam inserted; RHS scalar h_lam[(q^a - q^{c-b-1})/(1-q)] */
VerifyReport verify_prop_h_equiv(int k1, int k2, int a, int b, int c,
                                 const Partition& lam, Sides* sides = nullptr);

/* general-b form at z0 = 1 with g-certified insertions f_i[Z^(1) + X_i];
 * RHS alphabets (q^a - q^{c-b-1})/(1 - q^c) + X_i */
VerifyReport verify_inserted_equiv(int k1, int k2, int a, int b, int c,
                                   const LevelInsertions& ins,
                                   Sides* sides = nullptr);

enum class ChainVariant { GBasis, PBasis };
/* Collapsed pins every b_s to c-1, making all prefactors 1; General allows
 * free b_s subject to the staircase hypothesis a + sigma_s + s >= sc. */
enum class ChainNorm { Collapsed, General };

/* the n-level iterated identity at z0 = 1: level s carries rows
 * (1/z_i^(s))_{a_s} (q z_i^(s))_{b_s} with a_1 = a, a_{s>=2} = 0, its
 * Vandermonde, the normalization powers (z_i^(s))^{c-1-b_s}, shifted
 * coupling into level s+1, and the level's insertions; the RHS is the
 * product of Morris values M_{k_s}(a+sigma_s+s(1-c), c-1, c), prefactors,
 * trailing (1/z_j^(n+1))-rows, and f-values at the per-level virtual
 * alphabets (q^{a+sigma_{s-1}+(s-1)(1-c)} - q^{c-b_s-1})/(1-q^c). */
VerifyReport verify_thm_chain(const ChainParams& cp, const InsertionSpec& spec,
                              ChainVariant variant, ChainNorm norm,
                              Sides* sides = nullptr);

}  // namespace qct
