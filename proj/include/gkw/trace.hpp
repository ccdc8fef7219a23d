#ifndef GKW_TRACE_HPP
#define GKW_TRACE_HPP

#include <gkw/bigfloat.hpp>

namespace gkw {

// Tr L = sum_m 1/(1+xi_m^2), xi_m = (m+sqrt(m^2+4))/2: direct summation of
// `terms` terms plus an Euler-Maclaurin tail (1/(1+xi_m^2) has the closed
// form (1 - m/sqrt(m^2+4))/2, whose antiderivative and derivatives are
// elementary).
BigFloat trace_xi(long prec, long terms);

// Tr L = 1/2 - 1/(2*sqrt(5)) + (1/2) sum_{k>=1} (-1)^{k-1} C(2k,k)(zeta(2k)-1).
// The raw terms decay only like k^{-1/2}, so the alternating sum is run
// through Cohen-Rodriguez Villegas-Zagier acceleration (valid here: the
// terms are moments of a positive measure on [0,1]), giving roughly
// (3+sqrt 8)^-terms error.
BigFloat trace_binomial(long prec, long terms);

}  // namespace gkw

#endif
