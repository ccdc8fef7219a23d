#ifndef GKW_RATIONAL_HPP
#define GKW_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace gkw {

// Exact arbitrary-precision rational. mpq_class keeps the canonical form we
// require: gcd(|num|, den) = 1, den >= 1, zero stored as 0/1.
using BigInt = mpz_class;
using BigRational = mpq_class;

inline BigRational make_rational(long num, long den = 1) {
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

// 2^e for possibly negative e.
inline BigRational pow2q(long e) {
  BigRational q;
  if (e >= 0) {
    mpz_ui_pow_ui(q.get_num_mpz_t(), 2, static_cast<unsigned long>(e));
  } else {
    mpz_ui_pow_ui(q.get_den_mpz_t(), 2, static_cast<unsigned long>(-e));
  }
  return q;
}

inline BigInt pow2z(unsigned long e) {
  BigInt z;
  mpz_ui_pow_ui(z.get_mpz_t(), 2, e);
  return z;
}

// Parses "123", "-4/7". Throws std::invalid_argument on malformed input.
BigRational parse_rational(const std::string& text);

// Fixed-point decimal rendering, round-to-nearest with ties to even.
// Exact: no double rounding anywhere.
std::string render_decimal(const BigRational& x, int digits);

}  // namespace gkw

#endif
