#pragma once

#include <cstdint>
#include <vector>

#include "qct/series.hpp"

namespace qct {

/* Per-factor expansion caps J_f sufficient for exact constant-term
 * extraction over vars: for each eliminated variable v, the orders j_f of
 * the factors with num_var v never need to exceed J_f in any contributing
 * composition.  Caps are propagated level by level: expanding a level-s
 * factor to order J lowers the reachable minimum exponent of its den_var.
 * Aligned with e.factors. */
std::vector<int64_t> truncation_bounds(const SeriesExpr& e,
                                       const std::vector<VarId>& vars);

/* Exact constant term of e with respect to vars (every listed variable's
 * exponent pinned to zero, variable removed from the result).  vars may
 * span several levels; they are eliminated in ascending level order.  Every
 * factor's num_var must be among vars. */
MultiLaurent constant_term(const SeriesExpr& e, const std::vector<VarId>& vars);

/* Oracle route: expand factor f to order <= caps[f] by truncated
 * multiplication with dead-term pruning, then read off the coefficient
 * where every var's exponent is zero.  Exact whenever caps >=
 * truncation_bounds(e, vars) componentwise. */
MultiLaurent ct_by_expansion(const SeriesExpr& e, const std::vector<VarId>& vars,
                             const std::vector<int64_t>& caps);

/* Partial-fraction route for single-level expressions whose factors all
 * share one free den_var w and cover each pair (num var, shift 0..c-1)
 * exactly once: decompose against the Vandermonde-type numerator and sum
 * per-pole constant terms.  Result may still involve w. */
MultiLaurent ct_via_splitting(const SeriesExpr& e, const std::vector<VarId>& yvars);

/* The explicit pole coefficient of the decomposition
 *   N(y) / prod_l (y_l/w)_c = sum_{i,j} A_ij(y) / (1 - q^j y_i / w),
 * for the Vandermonde-type numerator N(y) = prod_{u<v} (y_u/y_v)_c (q y_v/y_u)_c
 * over y_1..y_n at the given level. */
MultiLaurent splitting_coefficient_at(int n, int c, int i, int j, int32_t level);

}  // namespace qct
