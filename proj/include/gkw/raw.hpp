#ifndef GKW_RAW_HPP
#define GKW_RAW_HPP

#include <gkw/rational.hpp>

#include <string>
#include <vector>

namespace gkw {

// Scalar table a_{p,t}(n), psi_j(n) from the raw coefficient recurrence
// (the power-series comparison at (w-2)^p/(z-1)^{n+p+1-t}). This is a
// deliberately separate implementation path from the engine's recurrence;
// the two are compared cell-by-cell in the oracle suite. Do not "simplify"
// it to reuse engine code.
struct RawTable {
  int n = 1;
  int N = 0;
  std::vector<std::vector<BigRational>> grid;  // a_{p,t}(n)
  std::vector<BigRational> psi_values;         // psi_j(n)
};

RawTable raw_recurrence(int n, int N);

struct ClosedFormCheck {
  std::string name;
  BigRational closed_form;
  BigRational engine_value;
  bool pass = false;
};

struct ClosedFormReport {
  int n = 0;
  std::vector<ClosedFormCheck> checks;
  bool all_pass = true;
};

// Checks the z-derivative closed forms at z=2 (lambda_n(2), P'_n(2), the
// second and third derivatives, the c^(l)_n recursion, Q_n(2)) against the
// engine's specialized values A_{0,l}(n,2^n) and A_{1,0}(n,2^n).
// Requires 1 <= L <= n-1.
ClosedFormReport closed_form_checks(int n, int L);

}  // namespace gkw

#endif
