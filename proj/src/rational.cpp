#include <gkw/rational.hpp>

#include <stdexcept>

namespace gkw {

BigRational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && i == 0) || (c == '+' && i == 0);
    if (!ok) throw std::invalid_argument("malformed rational: " + text);
  }
  BigRational q;
  if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
    throw std::invalid_argument("malformed rational: " + text);
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
    throw std::invalid_argument("zero denominator: " + text);
  q.canonicalize();
  return q;
}

std::string render_decimal(const BigRational& x, int digits) {
  if (digits < 1) digits = 1;
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  // Round x*scale to nearest integer, ties to even.
  BigInt num = x.get_num() * scale;
  const BigInt& den = x.get_den();
  BigInt q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  BigInt twice_r = 2 * r;
  int cmp = mpz_cmp(twice_r.get_mpz_t(), den.get_mpz_t());
  if (cmp > 0 || (cmp == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;

  bool neg = q < 0;
  if (neg) q = -q;
  BigInt ip, fp;
  mpz_fdiv_qr(ip.get_mpz_t(), fp.get_mpz_t(), q.get_mpz_t(), scale.get_mpz_t());
  std::string frac = fp.get_str();
  frac.insert(0, static_cast<size_t>(digits) - frac.size(), '0');
  std::string out = neg ? "-" : "";
  out += ip.get_str();
  out += '.';
  out += frac;
  return out;
}

}  // namespace gkw
