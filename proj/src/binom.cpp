#include <gkw/binom.hpp>

#include <gkw/errors.hpp>

namespace gkw {

BigInt int_binom(long m, long r) {
  if (m < 0)
    throw InternalInconsistency("int_binom: negative top " + std::to_string(m));
  if (r < 0 || r > m) return BigInt(0);
  BigInt z;
  mpz_bin_uiui(z.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(r));
  return z;
}

BigInt gen_binom(long m, long r) {
  if (r < 0) return BigInt(0);
  BigInt z;
  mpz_bin_ui(z.get_mpz_t(), BigInt(m).get_mpz_t(), static_cast<unsigned long>(r));
  return z;
}

BigInt factorial(unsigned long n) {
  BigInt z;
  mpz_fac_ui(z.get_mpz_t(), n);
  return z;
}

}  // namespace gkw
