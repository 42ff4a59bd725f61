#pragma once

#include <map>
#include <string>
#include <vector>

#include "qct/alphabet.hpp"
#include "qct/partition.hpp"

namespace qct {

/* ----- evaluations, all routed through power-sum moments ----- */

/* p_r[A] for r >= 1 */
MultiLaurent p_eval(int r, const Alphabet& a);

/* h_r[A] via the Newton recurrence r h_r = sum_{i=1}^r p_i h_{r-i}; h_0 = 1 */
MultiLaurent h_eval(int r, const Alphabet& a);

/* e_r[A] = (-1)^r h_r[-A] */
MultiLaurent e_eval(int r, const Alphabet& a);

/* g_r(A; q, q^c) = h_r[(1 - q^c)/(1 - q) A] */
MultiLaurent g_eval(int r, const Alphabet& a, int c);

/* products over the parts of a partition */
MultiLaurent p_eval(const Partition& lam, const Alphabet& a);
MultiLaurent h_eval(const Partition& lam, const Alphabet& a);
MultiLaurent g_eval(const Partition& lam, const Alphabet& a, int c);

/* p_n recovered from h_1..h_n through the n x n determinant whose first
 * column is h_1, 2h_2, ..., n h_n, whose superdiagonal is 1, and whose
 * remaining (i,j) entry is h_{i-j+1}; must agree with p_eval(n, a) */
MultiLaurent p_from_h_determinant(int n, const Alphabet& a);

/* ----- finite expansions in the p- or g-basis ----- */

enum class SymBasis { P, G };

/* A homogeneous symmetric function given as a finite expansion
 * f = sum_lam coeff_lam * b_lam over basis b in {p, g}.  The g-basis
 * carries the parameter t = q^c only at evaluation time. */
class SymFunc {
  public:
    SymFunc() = default;  // the zero function, degree 0

    static SymFunc basis_element(SymBasis basis, const Partition& lam);
    static SymFunc p(const Partition& lam) { return basis_element(SymBasis::P, lam); }
    static SymFunc g(const Partition& lam) { return basis_element(SymBasis::G, lam); }
    /* classical expansions over the power sums:
     * h_r = sum_{lam of r} p_lam / z_lam,  e_r with the sign (-1)^{r-l(lam)} */
    static SymFunc h(int r);
    static SymFunc e(int r);

    SymBasis basis() const { return basis_; }
    const std::map<Partition, QRat>& coeffs() const { return coeffs_; }
    int64_t degree() const { return degree_; }
    bool is_zero() const { return coeffs_.empty(); }
    /* largest l(mu) over the support */
    int max_support_length() const;

    SymFunc operator+(const SymFunc& o) const;  // same basis, same degree
    SymFunc scaled(const QRat& c) const;

    /* evaluate at an alphabet; c feeds the g-basis (ignored for p) */
    MultiLaurent eval(const Alphabet& a, int c) const;

    std::string to_string() const;  // e.g. "p(2,1)" or "g(1) + (q)*g(2)"

  private:
    SymBasis basis_ = SymBasis::P;
    std::map<Partition, QRat> coeffs_;
    int64_t degree_ = 0;
};

/* Expand a degree-d homogeneous p-basis function in the g-basis at t = q^c
 * by evaluating both sides on d generic letters and solving the exact
 * linear system.  The g_mu with |mu| = d are a basis, so the system is
 * always solvable; an inconsistent or underdetermined system is an
 * internal error. */
std::map<Partition, QRat> convert_to_g_basis(const SymFunc& f, int d, int c);

}  // namespace qct
