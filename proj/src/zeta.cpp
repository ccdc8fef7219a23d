#include <gkw/zeta.hpp>

#include <gkw/binom.hpp>
#include <gkw/errors.hpp>

#include <cmath>
#include <mutex>

namespace gkw {

const std::vector<BigRational>& bernoulli_table(size_t n) {
  static std::mutex mu;
  static std::vector<BigRational> table;
  std::lock_guard<std::mutex> lock(mu);
  if (table.size() > n) return table;
  if (table.empty()) table.push_back(BigRational(1));
  // sum_{j=0}^{m} C(m+1, j) B_j = 0  =>  B_m.
  for (size_t m = table.size(); m <= n; ++m) {
    BigRational s(0);
    for (size_t j = 0; j < m; ++j)
      s += BigRational(int_binom(static_cast<long>(m) + 1, static_cast<long>(j))) * table[j];
    table.push_back(-s / BigRational(static_cast<long>(m) + 1));
  }
  return table;
}

namespace {

// Shared Euler-Maclaurin tail for sum_{m>=M} m^{-s}:
//   M^{1-s}/(s-1) + M^{-s}/2 + sum_{r=1..R} B_{2r}/(2r)! * (s)_{2r-1} * M^{-s-2r+1}
// with (s)_q the rising factorial. The first omitted term bounds the error.
template <class Exponent>
BigFloat em_tail(const Exponent& s, long M, int R, long wp) {
  const auto& bern = bernoulli_table(static_cast<size_t>(2 * R + 2));
  BigFloat m(M, wp);
  BigFloat sw = [&] {
    if constexpr (std::is_same_v<Exponent, long>) return BigFloat(s, wp);
    else return s.with_precision(wp);
  }();
  // M^{-s} = exp(-s log M)
  BigFloat mlog = m.log();
  BigFloat m_pow_ms = (-(sw * mlog)).exp();
  BigFloat tail = m_pow_ms * m / (sw - BigFloat(1, wp));  // M^{1-s}/(s-1)
  tail += m_pow_ms * BigFloat(BigRational(1, 2), wp);
  BigFloat rising(1, wp);  // (s)(s+1)...(s+q-1)
  BigFloat mpow = m_pow_ms / m;  // M^{-s-1}, updated by /M^2 per step
  for (int r = 1; r <= R; ++r) {
    // rising needs (s)_{2r-1}: multiply two more factors each round except
    // the first, which multiplies one.
    if (r == 1) {
      rising = sw;
    } else {
      rising = rising * (sw + BigFloat(2 * r - 3, wp)) * (sw + BigFloat(2 * r - 2, wp));
    }
    tail += BigFloat(bern[static_cast<size_t>(2 * r)], wp) *
            BigFloat(BigRational(1, factorial(static_cast<unsigned long>(2 * r))), wp) * rising *
            mpow;
    mpow = mpow / (m * m);
  }
  return tail;
}

template <class Exponent>
BigFloat zm1_impl(const Exponent& s, long prec) {
  // Work precision absorbs the ~2^k cancellation-free headroom and the
  // direct-sum length.
  long k_hint;
  if constexpr (std::is_same_v<Exponent, long>) k_hint = s;
  else k_hint = static_cast<long>(s.to_double());
  long wp = prec + k_hint + 64;
  const int R = 12;
  // Choose M so the first omitted EM term is far below 2^-wp relative to
  // the leading 2^-s term: |B_{2R+2}|/(2R+2)! (s)_{2R+1} M^{-s-2R-1}
  // <= (s+2R+1)^{2R+2} / (2 pi M)^{2R+2} * M^{1-s} roughly; take
  // M = max(32, 2^{(prec+16)/(2R+2)} * (s+2R+2)/(2 pi)).
  double sd = static_cast<double>(k_hint);
  double mfac = (sd + 2 * R + 2) / 6.283;
  double mexp = std::exp2(static_cast<double>(prec + 16) / (2 * R + 2));
  long M = static_cast<long>(mfac * mexp) + 32;
  if (M < 32) M = 32;

  BigFloat sum(0, wp);
  BigFloat sw = [&] {
    if constexpr (std::is_same_v<Exponent, long>) return BigFloat(s, wp);
    else return s.with_precision(wp);
  }();
  for (long m = 2; m < M; ++m) {
    if constexpr (std::is_same_v<Exponent, long>) {
      BigRational t(1);
      mpz_ui_pow_ui(t.get_den_mpz_t(), static_cast<unsigned long>(m),
                    static_cast<unsigned long>(s));
      sum += BigFloat(t, wp);
    } else {
      sum += (-(sw * BigFloat(m, wp).log())).exp();
    }
  }
  sum += em_tail(s, M, R, wp);
  return sum.with_precision(prec);
}

}  // namespace

BigFloat zeta_minus_one(long k, long prec) {
  if (k < 2) throw DomainError("zeta_minus_one: need k >= 2");
  return zm1_impl(k, prec);
}

BigFloat zeta_minus_one(const BigFloat& s, long prec) {
  if (!(s > BigFloat(1, s.precision()))) throw DomainError("zeta_minus_one: need s > 1");
  return zm1_impl(s, prec);
}

}  // namespace gkw
