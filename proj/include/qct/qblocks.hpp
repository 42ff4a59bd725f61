#pragma once

#include <cstdint>
#include <vector>

#include "qct/ct.hpp"
#include "qct/report.hpp"
#include "qct/series.hpp"

namespace qct {

/* CT_z prod_i (z0/z_i)_a (q z_i/z0)_b prod_{i<j} (z_i/z_j)_c (q z_j/z_i)_c
 * over z_1..z_k evaluates to the closed product M_k(a,b,c). */
struct MorrisParams {
    int k = 0;
    int a = 0;
    int b = 0;
    int c = 1;
};

struct LParams {
    int k1 = 0;
    int k2 = 0;
    int a = 0;
    int b = 0;
    int c = 1;
};

struct ChainParams {
    int n = 1;
    std::vector<int> k;  // k_1 >= ... >= k_{n+1}, length n+1
    int a = 0;
    std::vector<int> b;  // b_1..b_n
    int c = 1;

    int sigma(int s) const {  // b_1 + ... + b_s
        int t = 0;
        for (int i = 0; i < s; ++i) t += b[(size_t)i];
        return t;
    }
};

/* M_k(a,b,c) = prod_{i=0}^{k-1} (q)_{a+b+ic} (q)_{(i+1)c}
 *                              / ((q)_{a+ic} (q)_{b+ic} (q)_c) */
QPoly morris_product(const MorrisParams& p);

/* the z-variables of one level family */
std::vector<VarId> level_vars(int32_t level, int count);

/* prod_{i<j over vars} (v_i/v_j)_c (q v_j/v_i)_c */
MultiLaurent vandermonde_block(const std::vector<VarId>& vars, int c);

/* prod_i (z0/v_i)_a (q v_i/z0)_b over the given family */
MultiLaurent morris_rows(VarId top, const std::vector<VarId>& vars, int a, int b);

/* full coupling family {(base_shift+m, u, w) : m<c, u in upper, w in lower} */
std::vector<GeomFactor> coupling_factors(const std::vector<VarId>& upper,
                                         const std::vector<VarId>& lower, int c,
                                         int64_t base_shift = 0);

SeriesExpr build_morris_lhs(const MorrisParams& p);

/* the two-family expression behind L_{k1,k2}(a,b,c): Morris rows and
 * Vandermonde over z^{(1)}, coupled into z^{(2)} */
SeriesExpr build_L(const LParams& p);

/* L itself: CT over level 1, a Laurent polynomial in z0 and z^{(2)} */
MultiLaurent eval_L(const LParams& p);

/* pole coefficient A_ij of the partial-fraction decomposition, level-1 y's */
MultiLaurent splitting_coefficient(int n, int c, int i, int j);

/* checks the decomposition N(y) = sum_{i,j} A_ij prod_{(l,u) != (i,j)}
 * (1 - q^u y_l/w) and, independently, every A_ij against the residue
 * N(y) / prod_{(l,u) != (i,j)} (1 - q^{u-j} y_l/y_i) by exact division */
VerifyReport verify_splitting(int n, int c);

/* the two Pochhammer shift identities in a fresh letter y:
 *   (1/y)_i (qy)_j = q^{it}  (q^{1-i}y)_t     (q^{t+1}y)_{j-t}   (q^{-t}/y)_i,  0 <= t <= j
 *   (y)_j (q/y)_i  = q^{i(t+1)} (q^{-i}y)_{t+1} (q^{t+1}y)_{j-t-1} (q^{-t}/y)_i, -1 <= t <= j-1 */
VerifyReport verify_pochhammer_shift(int i, int j, int t);

/* CT_{z^{(1)}} of prod_l (z_l^{(1)})^{-t_l} * Vandermonde / coupling = 0
 * whenever the sorted-multiset hypothesis on t holds; otherwise no claim */
VerifyReport verify_vanishing(int k1, int k2, int c, const std::vector<int>& t_vec);

/* whether the vanishing hypothesis holds for t_vec (B = nonpositive values,
 * D = positive values ascending; sum B + sum of the first p-k2 of D > 0) */
bool vanishing_hypothesis(int k2, const std::vector<int>& t_vec);

/* five structural facts about L = eval_L(p), checked on one CT result:
 * (i) no negative z0-powers; (ii) z0-degree <= k2*a; (iii) L vanishes at
 * z0 = q^m z_l^{(2)}, m = 1-a..b+1-c; (iv) [z0^0] L = M_{k1}(a,b,c);
 * (v) prod_j (q^{c-1-b} z0/z_j^{(2)})_{a+b+1-c} divides L exactly, with
 * quotient of z0-degree <= k2(c-1-b) */
VerifyReport verify_L_structure(const LParams& p);

}  // namespace qct
