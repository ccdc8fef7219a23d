#ifndef GKW_SERIES_HPP
#define GKW_SERIES_HPP

#include <gkw/engine.hpp>
#include <gkw/point_engine.hpp>

#include <utility>
#include <vector>

namespace gkw {

// Truncated alternating series sum_{j<=N} (-1)^j Psi_j (or Lambda_j) at a
// point, its reciprocal, and per-term magnitude diagnostics.
template <class S>
struct SeriesResult {
  Variant variant = Variant::GKW;
  int N = 0;
  std::vector<S> partial_sums;  // N+1 entries, cumulative
  S value;                      // reciprocal of partial_sums.back()
  std::vector<BigFloat> term_magnitudes;
};

// S_N(n) through the symbolic table (exact). Pre: table.variant == GKW,
// table.N >= N, n >= 1. Throws ZeroSum if the partial sum vanishes.
SeriesResult<BigRational> gkw_partial_sum(int n, int N, const CoeffTable& table);
// Same values through the point-specialized engine; used for orders beyond
// symbolic reach. Exactly equal to the table path where both run.
SeriesResult<BigRational> gkw_partial_sum(int n, int N);

// L_N(s) for integer s (exact path), X = s-1, Y = 2^{s-1}.
SeriesResult<BigRational> mr_partial_sum_exact(long s, int N, const CoeffTable& table);
SeriesResult<BigRational> mr_partial_sum_exact(long s, int N);

// L_N(s) for real / complex s on the float path (principal branch of
// 2^{s-1}). Pre: Re s > 1.
SeriesResult<BigFloat> mr_partial_sum(const BigFloat& s, int N, long prec);
SeriesResult<BigFloat> mr_partial_sum(const BigFloat& s, int N, const CoeffTable& table, long prec);
SeriesResult<BigComplex> mr_partial_sum(const BigComplex& s, int N, long prec);
SeriesResult<BigComplex> mr_partial_sum(const BigComplex& s, int N, const CoeffTable& table,
                                        long prec);

// d/ds sum_{j<=N} (-1)^j Lambda_j(s-1, 2^{s-1}) at s = 2, exactly, as the
// pair (a, b) with derivative = a*log(2) + b. Pre: table is MR, table.N >= N.
std::pair<BigRational, BigRational> klevy_linear_form(int N, const CoeffTable& table);

struct HensleyEstimate {
  BigFloat value;           // (l1'^2 - l1'') / (pi^6 l1'^3)
  BigFloat lambda1_prime;   // -F'/F^2 at s=2
  BigFloat lambda1_second;  // (2F'^2 - F F'')/F^3 at s=2
};

// Hensley-constant estimate from the N-truncated series; successive N
// give a Cauchy sequence (checked in tests, not assumed).
HensleyEstimate hensley_estimate(int N, const CoeffTable& table, long prec);

}  // namespace gkw

#endif
