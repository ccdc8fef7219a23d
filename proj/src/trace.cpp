#include <gkw/trace.hpp>

#include <gkw/binom.hpp>
#include <gkw/errors.hpp>
#include <gkw/zeta.hpp>

#include <vector>

namespace gkw {

namespace {

// Terms c * x^e * (x^2+4)^(-b/2); closed under d/dx.
struct RadTerm {
  BigRational c;
  int e;
  int b;
};

std::vector<RadTerm> differentiate(const std::vector<RadTerm>& ts) {
  std::vector<RadTerm> out;
  for (const auto& t : ts) {
    if (t.e > 0) out.push_back({t.c * t.e, t.e - 1, t.b});
    out.push_back({-t.c * t.b, t.e + 1, t.b + 2});
  }
  return out;
}

BigFloat eval_rad(const std::vector<RadTerm>& ts, const BigFloat& x, long wp) {
  BigFloat base = x * x + BigFloat(4, wp);
  BigFloat rsqrt = BigFloat(1, wp) / base.sqrt();
  BigFloat acc(0, wp);
  for (const auto& t : ts)
    acc += BigFloat(t.c, wp) * x.pow_si(t.e) * rsqrt.pow_si(t.b);
  return acc;
}

}  // namespace

BigFloat trace_xi(long prec, long terms) {
  if (terms < 1) throw DomainError("trace_xi: terms must be >= 1");
  long wp = prec + BigFloat::kGuardBits;
  // f(m) = 1/(1+xi_m^2) = (1 - m/sqrt(m^2+4))/2.
  BigFloat sum(0, wp);
  BigFloat half(BigRational(1, 2), wp);
  for (long m = 1; m <= terms; ++m) {
    BigFloat mf(m, wp);
    BigFloat root = (mf * mf + BigFloat(4, wp)).sqrt();
    sum += half * (BigFloat(1, wp) - mf / root);
  }
  // Euler-Maclaurin tail from a = terms+1:
  //   sum_{m>=a} f(m) = int_a^inf f + f(a)/2 - sum_r B_2r/(2r)! f^(2r-1)(a),
  // with int_a^inf f = (sqrt(a^2+4) - a)/2.
  BigFloat a(terms + 1, wp);
  BigFloat roota = (a * a + BigFloat(4, wp)).sqrt();
  BigFloat tail = (roota - a) * half;
  tail += half * (BigFloat(1, wp) - a / roota) * half;
  const int R = 6;
  const auto& bern = bernoulli_table(2 * R);
  std::vector<RadTerm> deriv = {{BigRational(-2), 0, 3}};  // f'
  for (int r = 1; r <= R; ++r) {
    if (r > 1) {
      deriv = differentiate(differentiate(deriv));  // f^(2r-1)
    }
    BigFloat coeff(bern[static_cast<size_t>(2 * r)] /
                       BigRational(factorial(static_cast<unsigned long>(2 * r))),
                   wp);
    tail -= coeff * eval_rad(deriv, a, wp);
  }
  return (sum + tail).with_precision(prec);
}

BigFloat trace_binomial(long prec, long terms) {
  if (terms < 1) throw DomainError("trace_binomial: terms must be >= 1");
  long wp = prec + BigFloat::kGuardBits;
  const long n = terms;
  // CVZ acceleration of sum_{k>=0} (-1)^k u_k with
  // u_k = C(2k+2, k+1) (zeta(2k+2)-1) / 2.
  BigFloat d = (BigFloat(3, wp) + BigFloat(8, wp).sqrt()).pow_si(n);
  d = (d + BigFloat(1, wp) / d) * BigFloat(BigRational(1, 2), wp);
  BigFloat b(-1, wp);
  BigFloat c = -d;
  BigFloat s(0, wp);
  for (long k = 0; k < n; ++k) {
    c = b - c;
    BigFloat u = BigFloat(int_binom(2 * k + 2, k + 1), wp) *
                 zeta_minus_one(2 * k + 2, wp) * BigFloat(BigRational(1, 2), wp);
    s += c * u;
    // b <- b * (k+n)(k-n) / ((k+1/2)(k+1))
    b = b * BigFloat(k + n, wp) * BigFloat(k - n, wp) /
        (BigFloat(BigRational(2 * k + 1, 2), wp) * BigFloat(k + 1, wp));
  }
  BigFloat accel = s / d;
  BigFloat five_root = BigFloat(5, wp).sqrt();
  BigFloat result = BigFloat(BigRational(1, 2), wp) -
                    BigFloat(1, wp) / (BigFloat(2, wp) * five_root) + accel;
  return result.with_precision(prec);
}

}  // namespace gkw
