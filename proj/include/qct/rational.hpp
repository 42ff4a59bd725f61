#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>

namespace qct {

/* Arbitrary-precision rationals, always kept canonical (reduced, positive
 * denominator).  GMP guarantees this for arithmetic results; construction
 * from raw numerator/denominator goes through make_rat. */
using BigRat = mpq_class;
using BigInt = mpz_class;

inline BigRat make_rat(BigInt num, BigInt den = BigInt(1)) {
    BigRat r(std::move(num), std::move(den));
    r.canonicalize();
    return r;
}

inline bool is_zero(const BigRat& r) { return sgn(r) == 0; }

inline std::string to_string(const BigRat& r) { return r.get_str(); }

/* binom(m, 2) = m(m-1)/2, valid for any integer m (negative included). */
inline int64_t choose2(int64_t m) { return m * (m - 1) / 2; }

}  // namespace qct
