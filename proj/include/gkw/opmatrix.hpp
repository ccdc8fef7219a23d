#ifndef GKW_OPMATRIX_HPP
#define GKW_OPMATRIX_HPP

#include <gkw/bigcomplex.hpp>
#include <gkw/bigfloat.hpp>

#include <vector>

namespace gkw {

// Truncated matrix of the transfer operator in the monomial basis
// (t-1)^l on the disc centered at 1: T[k][l] is the k-th Taylor
// coefficient at x=1 of the operator applied to (t-1)^l,
//   T[k][l] = sum_{r=0}^{l} C(l,r) (-1)^{l-r} (-1)^k C(k+r+1,k) (zeta(2+r+k)-1).
struct OperatorMatrix {
  int dim = 0;
  long prec = 0;
  std::vector<std::vector<BigFloat>> entries;

  BigFloat trace() const;
};

OperatorMatrix operator_matrix(int dim, long prec);

// All eigenvalues of a real matrix by Householder Hessenberg reduction and
// Francis double-shift QR, eigenvalues only, sorted by descending |.|.
// Throws ConvergenceFailure past the iteration cap.
std::vector<BigComplex> real_matrix_eigenvalues(const OperatorMatrix& m);

// The `count` largest-in-magnitude real eigenvalues of the dim x dim
// operator truncation.
std::vector<BigFloat> gkw_eigenvalues(int dim, long prec, int count);

}  // namespace gkw

#endif
