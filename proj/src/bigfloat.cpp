#include <gkw/bigfloat.hpp>

#include <cstdio>
#include <vector>

namespace gkw {

std::string BigFloat::to_decimal(int digits) const {
  if (digits < 1) digits = 1;
  // %Rf with explicit rounding mode: nearest, ties to even.
  int n = mpfr_snprintf(nullptr, 0, "%.*R*f", digits, MPFR_RNDN, v_);
  std::vector<char> buf(static_cast<size_t>(n) + 1);
  mpfr_snprintf(buf.data(), buf.size(), "%.*R*f", digits, MPFR_RNDN, v_);
  return std::string(buf.data());
}

}  // namespace gkw
