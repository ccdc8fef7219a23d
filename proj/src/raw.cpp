#include <gkw/raw.hpp>

#include <gkw/binom.hpp>
#include <gkw/errors.hpp>
#include <gkw/point_engine.hpp>

#include <algorithm>

namespace gkw {

namespace {

// Sum of all right-hand-side terms of the raw recurrence at (p,t),
// excluding the two self terms (first sum at j=0,k=p,i=t and second sum at
// k=p,i=t) and, on the diagonal, the psi_P term at (j,k,i) = (p,0,0).
BigRational raw_rhs(const RawTable& tb, int n, int p, int t, bool skip_psi_p) {
  std::vector<BigRational> terms;
  for (int j = 0; j <= p; ++j)
    for (int k = 0; k <= p - j; ++k)
      for (int i = 0; i <= t - j; ++i) {
        if (j == 0 && k == p && i == t) continue;
        if (skip_psi_p && p == t && j == p && k == 0 && i == 0) continue;
        BigInt b1 = gen_binom(n + p - i - j, p - j - k);
        if (b1 == 0) continue;
        BigInt b2 = gen_binom(n + k - i - 1, t - i - j);
        if (b2 == 0) continue;
        BigRational sc(b1 * b2, pow2z(static_cast<unsigned long>(n + p + 1 - i - j)));
        sc.canonicalize();
        if ((k - i) % 2) sc = -sc;
        terms.push_back(tb.psi_values[static_cast<size_t>(j)] *
                        tb.grid[static_cast<size_t>(k)][static_cast<size_t>(i)] * sc);
      }
  for (int k = 0; k <= p; ++k)
    for (int i = 0; i <= t; ++i) {
      if (k == p && i == t) continue;
      BigInt b1 = gen_binom(n + p - i, p - k);
      if (b1 == 0) continue;
      BigInt b2 = int_binom(p - k, p + i - k - t);
      if (b2 == 0) continue;
      BigRational sc(b1 * b2, pow2z(static_cast<unsigned long>(n + p - i)));
      sc.canonicalize();
      if ((p - k) % 2) sc = -sc;
      terms.push_back(tb.grid[static_cast<size_t>(k)][static_cast<size_t>(i)] * sc);
    }
  for (int k = 0; k <= p - 1; ++k)
    for (int i = 0; i <= t - 1; ++i) {
      BigInt b1 = gen_binom(n + p - i - 1, p - k - 1);
      if (b1 == 0) continue;
      BigInt b2 = int_binom(p - k - 1, p + i - k - t);
      if (b2 == 0) continue;
      BigRational sc(b1 * b2, pow2z(static_cast<unsigned long>(n + p - i)));
      sc.canonicalize();
      if ((p - k - 1) % 2) sc = -sc;
      terms.push_back(tb.grid[static_cast<size_t>(k)][static_cast<size_t>(i)] * sc);
    }
  BigRational total(0);
  for (const auto& v : terms) total += v;
  return total;
}

// Coefficient of the unknown a_{p,t} after moving both self terms left:
// 1 - psi_0(n)*(-1)^(p-t)/2^(n+p+1-t) - 1/2^(n+p-t).
BigRational raw_self_coef(int n, int p, int t) {
  BigRational c(1);
  BigRational s1 = BigRational(pow2z(static_cast<unsigned long>(n + 1)) - 2,
                               pow2z(static_cast<unsigned long>(n + p + 1 - t)));
  s1.canonicalize();
  if ((p - t) % 2) s1 = -s1;
  c -= s1;
  BigRational s2(1, pow2z(static_cast<unsigned long>(n + p - t)));
  c -= s2;
  return c;
}

}  // namespace

RawTable raw_recurrence(int n, int N) {
  if (n < 1) throw DomainError("raw_recurrence: n must be >= 1");
  if (N < 0) throw DomainError("raw_recurrence: N must be >= 0");
  RawTable tb;
  tb.n = n;
  tb.N = N;
  tb.grid.assign(static_cast<size_t>(N) + 1,
                 std::vector<BigRational>(static_cast<size_t>(N) + 1, BigRational(0)));
  tb.psi_values.assign(static_cast<size_t>(N) + 1, BigRational(0));
  tb.grid[0][0] = 1;
  tb.psi_values[0] = BigRational(pow2z(static_cast<unsigned long>(n + 1)) - 2);

  for (int P = 0; P <= N; ++P) {
    auto solve_off_diag = [&](int t) {
      BigRational coef = raw_self_coef(n, P, t);
      if (coef == 0)
        throw InternalInconsistency("raw recurrence: vanishing coefficient off the diagonal");
      tb.grid[static_cast<size_t>(P)][static_cast<size_t>(t)] = raw_rhs(tb, n, P, t, true) / coef;
    };
    for (int t = 0; t < P; ++t) solve_off_diag(t);
    if (P >= 1) {
      // Diagonal: coefficient of a_{P,P} vanishes; psi_P enters through
      // (j,k,i) = (P,0,0) with weight a_{0,0}/2^{n+1}.
      BigRational coef = raw_self_coef(n, P, P);
      if (coef != 0)
        throw InternalInconsistency("raw recurrence: diagonal coefficient did not vanish");
      BigRational rhs = raw_rhs(tb, n, P, P, true);
      tb.psi_values[static_cast<size_t>(P)] =
          -rhs * BigRational(pow2z(static_cast<unsigned long>(n + 1)));
      tb.grid[static_cast<size_t>(P)][static_cast<size_t>(P)] = 0;
    }
    for (int t = P + 1; t <= N; ++t) solve_off_diag(t);
  }
  return tb;
}

ClosedFormReport closed_form_checks(int n, int L) {
  if (n < 2 || L < 1 || L > n - 1)
    throw DomainError("closed_form_checks: need n >= 2 and 1 <= L <= n-1");
  ClosedFormReport rep;
  rep.n = n;
  BigInt twon = pow2z(static_cast<unsigned long>(n));
  PointTable<BigRational> pt =
      build_point_table(Variant::GKW, std::max(L, 1), BigRational(n), BigRational(twon));

  auto add = [&](std::string name, BigRational closed, BigRational engine) {
    ClosedFormCheck c;
    c.name = std::move(name);
    c.closed_form = std::move(closed);
    c.engine_value = std::move(engine);
    c.pass = (c.closed_form == c.engine_value);
    rep.all_pass = rep.all_pass && c.pass;
    rep.checks.push_back(std::move(c));
  };

  // lambda_n(2) = 2^{n+1} - 2 = psi_0(n).
  add("lambda_n(2)", BigRational(2 * twon - 2), pt.psi[0]);

  // Q_n(2) = (2^n-2)/(3*2^n-2) * (n+1) = A_{1,0}(n, 2^n).
  {
    BigRational q(BigInt(twon - 2) * (n + 1), BigInt(3) * twon - 2);
    q.canonicalize();
    add("Q_n(2)", q, pt.grid[1][0]);
  }

  // d^l/dz^l P_n(2) = (n-1)!/(n-l-1)! * c^(l)_n, and the engine's
  // A_{0,l}(n,2^n) is the l-th Taylor coefficient, so
  // c^(l)_n = A_{0,l} * l! * (n-l-1)!/(n-1)!.
  std::vector<BigRational> c(static_cast<size_t>(L) + 1);
  c[0] = 1;
  for (int l = 1; l <= L; ++l) {
    BigRational al;
    if (l % 2 == 0) {
      al = BigRational(BigInt(1) - pow2z(static_cast<unsigned long>(l)));
    } else {
      al = BigRational(pow2z(static_cast<unsigned long>(l)) + 1) - pow2q(l + 1 - n);
    }
    BigRational s(0);
    for (int i = 0; i < l; ++i) {
      BigRational term = c[static_cast<size_t>(i)] * BigRational(int_binom(l, i)) *
                         BigRational(pow2z(static_cast<unsigned long>(i)));
      if (i % 2) term = -term;
      s += term;
    }
    c[static_cast<size_t>(l)] = BigRational(BigInt(twon - 1)) / (BigRational(twon) * al) * s;
  }
  for (int l = 1; l <= L; ++l) {
    BigRational lhs = pt.grid[0][static_cast<size_t>(l)] * BigRational(factorial(static_cast<unsigned long>(l))) *
                      BigRational(factorial(static_cast<unsigned long>(n - l - 1))) /
                      BigRational(factorial(static_cast<unsigned long>(n - 1)));
    add("c^(" + std::to_string(l) + ")_n", c[static_cast<size_t>(l)], lhs);
  }

  // Direct displays for l = 1..3.
  {
    BigRational p1(BigInt(twon - 1) * (n - 1), BigInt(3) * twon - 4);
    p1.canonicalize();
    add("P'_n(2)", p1, pt.grid[0][1] * BigRational(factorial(1)));
  }
  if (n >= 3 && L >= 2) {
    BigRational p2(BigInt(twon - 1) * (n - 1) * (n - 2), BigInt(3) * (BigInt(3) * twon - 4));
    p2.canonicalize();
    add("P''_n(2)", p2, pt.grid[0][2] * BigRational(factorial(2)));
  }
  if (n >= 4 && L >= 3) {
    BigRational p3(BigInt(BigInt(twon - 2) * BigInt(twon - 1) * (n - 1) * (n - 2) * (n - 3)),
                   BigInt((BigInt(3) * twon - 4) * (BigInt(9) * twon - 16)));
    p3.canonicalize();
    add("P'''_n(2)", p3, pt.grid[0][3] * BigRational(factorial(3)));
  }
  return rep;
}

}  // namespace gkw
