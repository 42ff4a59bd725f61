#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qct/multilaurent.hpp"

namespace qct {

/* A moment-defined alphabet: a finite list of letters with rational-function
 * multiplicities, optionally divided by a product of factors (1 - q^{c_i}).
 * Its r-th power-sum moment is
 *     p_r[A] = (sum_i mult_i * letter_i^r) / prod_i (1 - q^{c_i r}),
 * which stays inside MultiLaurent because each (1 - q^{c_i r}) divides into
 * the coefficient field.  Sums, differences, products and division by
 * (1 - q^c) are all expressible, covering finite, virtual and mixed
 * alphabets alike. */
class Alphabet {
  public:
    Alphabet() = default;

    static Alphabet from_vars(const std::vector<VarId>& vars);
    static Alphabet single(const Monomial& m);

    void add_letter(Monomial m, QRat mult = QRat(1L));
    void add_geom_denom(int c);  // divide the whole alphabet by 1 - q^c

    const std::vector<std::pair<Monomial, QRat>>& letters() const { return letters_; }
    const std::vector<int>& geom_denoms() const { return denoms_; }
    bool empty() const { return letters_.empty(); }

    Alphabet negated() const;                       // p_r -> -p_r
    Alphabet operator+(const Alphabet& o) const;    // p_r -> p_r[A] + p_r[B]
    Alphabet operator*(const Alphabet& o) const;    // p_r -> p_r[A] * p_r[B]
    Alphabet scaled(const Monomial& m) const;       // letters scaled by m
    Alphabet g_transformed(int c) const;            // times (1 - q^c)/(1 - q)

    /* every variable occurring in any letter */
    std::vector<VarId> vars() const;

    std::string to_string() const;

  private:
    std::vector<std::pair<Monomial, QRat>> letters_;
    std::vector<int> denoms_;  // sorted multiset
};

/* the virtual alphabet (q^{e1} - q^{e2}) / (1 - q^c) */
Alphabet geometric_difference(int64_t e1, int64_t e2, int c);

}  // namespace qct
