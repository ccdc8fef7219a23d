#ifndef GKW_POINT_ENGINE_HPP
#define GKW_POINT_ENGINE_HPP

#include <gkw/bigcomplex.hpp>
#include <gkw/engine.hpp>

#include <vector>

namespace gkw {

// The same recurrence specialized at a fixed evaluation point (X,Y) =
// (x0,y0): every grid entry is then a plain scalar, which is what the
// series evaluations at large order need (the symbolic table at N=40 is
// far out of reach, its entries have thousands of terms). Exact equality
// with rf_eval_exact over the symbolic table is part of the test suite.
template <class S>
struct PointTable {
  Variant variant = Variant::GKW;
  int N = 0;
  S x0;
  S y0;
  std::vector<S> psi;
  std::vector<std::vector<S>> grid;
};

// Exact path. y0 must avoid the finitely many rational points where a
// solve coefficient (2^p +/- 2^t)y0 - ... vanishes; for y0 = 2^n, n >= 1,
// none do.
PointTable<BigRational> build_point_table(Variant v, int N, const BigRational& x0,
                                          const BigRational& y0);

// Guarded float paths; throw NearPoleError if a solve coefficient
// underflows while its numerator is nonzero.
PointTable<BigFloat> build_point_table(Variant v, int N, const BigFloat& x0,
                                       const BigFloat& y0, long prec);
PointTable<BigComplex> build_point_table(Variant v, int N, const BigComplex& x0,
                                         const BigComplex& y0, long prec);

}  // namespace gkw

#endif
