#ifndef GKW_BINOM_HPP
#define GKW_BINOM_HPP

#include <gkw/rational.hpp>

namespace gkw {

// Standard binomial with the out-of-range convention: C(m,r) = 0 when r < 0
// or r > m. Negative m is rejected; the recurrence's index ranges never
// produce it, so seeing one means the engine is broken.
BigInt int_binom(long m, long r);

// Generalized binomial for any integer top: C(m,r) = m(m-1)...(m-r+1)/r!,
// zero for r < 0. In particular C(m,0) = 1 even for negative m. Always an
// integer.
BigInt gen_binom(long m, long r);

BigInt factorial(unsigned long n);

}  // namespace gkw

#endif
