#ifndef GKW_ZETA_HPP
#define GKW_ZETA_HPP

#include <gkw/bigfloat.hpp>
#include <gkw/rational.hpp>

#include <vector>

namespace gkw {

// Bernoulli numbers B_0..B_n (B_1 = -1/2), exact.
const std::vector<BigRational>& bernoulli_table(size_t n);

// zeta(k) - 1 = sum_{m>=2} m^{-k} via direct summation to a cutoff plus an
// Euler-Maclaurin tail correction; relative error <= 2^-prec.
BigFloat zeta_minus_one(long k, long prec);

// zeta(s) - 1 for real s > 1 (same scheme with real exponent).
BigFloat zeta_minus_one(const BigFloat& s, long prec);

}  // namespace gkw

#endif
