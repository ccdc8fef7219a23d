#include <gkw/series.hpp>

#include <gkw/errors.hpp>

namespace gkw {

namespace {

BigFloat magnitude(const BigRational& v) { return BigFloat(v, 64).abs(); }
BigFloat magnitude(const BigFloat& v) { return v.abs().with_precision(64); }
BigFloat magnitude(const BigComplex& v) { return v.abs().with_precision(64); }

template <class S>
SeriesResult<S> accumulate_terms(Variant variant, int N, const std::vector<S>& psi_at_point,
                                 const S& one) {
  SeriesResult<S> r;
  r.variant = variant;
  r.N = N;
  r.partial_sums.reserve(static_cast<size_t>(N) + 1);
  r.term_magnitudes.reserve(static_cast<size_t>(N) + 1);
  S acc = one - one;
  for (int j = 0; j <= N; ++j) {
    const S& t = psi_at_point[static_cast<size_t>(j)];
    acc = (j % 2 == 0) ? acc + t : acc - t;
    r.partial_sums.push_back(acc);
    r.term_magnitudes.push_back(magnitude(t));
  }
  bool zero;
  if constexpr (std::is_same_v<S, BigRational>) zero = (acc == 0);
  else zero = acc.is_zero();
  if (zero) throw ZeroSum("partial sum vanishes; reciprocal undefined");
  r.value = one / acc;
  return r;
}

std::vector<BigRational> eval_table_psis(const CoeffTable& table, int N, const BigRational& x0,
                                         const BigRational& y0) {
  std::vector<BigRational> out;
  out.reserve(static_cast<size_t>(N) + 1);
  for (int j = 0; j <= N; ++j) out.push_back(rf_eval_exact(table.psi[static_cast<size_t>(j)], x0, y0));
  return out;
}

void require_order(const CoeffTable& table, Variant v, int N) {
  if (table.variant != v) throw DomainError("series: wrong table variant");
  if (table.N < N) throw DomainError("series: table order too small");
}

}  // namespace

SeriesResult<BigRational> gkw_partial_sum(int n, int N, const CoeffTable& table) {
  if (n < 1) throw DomainError("gkw_partial_sum: n must be >= 1");
  require_order(table, Variant::GKW, N);
  BigRational y0(pow2z(static_cast<unsigned long>(n)));
  return accumulate_terms(Variant::GKW, N, eval_table_psis(table, N, BigRational(n), y0),
                          BigRational(1));
}

SeriesResult<BigRational> gkw_partial_sum(int n, int N) {
  if (n < 1) throw DomainError("gkw_partial_sum: n must be >= 1");
  BigRational y0(pow2z(static_cast<unsigned long>(n)));
  auto pt = build_point_table(Variant::GKW, N, BigRational(n), y0);
  return accumulate_terms(Variant::GKW, N, pt.psi, BigRational(1));
}

SeriesResult<BigRational> mr_partial_sum_exact(long s, int N, const CoeffTable& table) {
  if (s <= 1) throw DomainError("mr_partial_sum: need Re s > 1");
  require_order(table, Variant::MR, N);
  BigRational y0(pow2z(static_cast<unsigned long>(s - 1)));
  return accumulate_terms(Variant::MR, N, eval_table_psis(table, N, BigRational(s - 1), y0),
                          BigRational(1));
}

SeriesResult<BigRational> mr_partial_sum_exact(long s, int N) {
  if (s <= 1) throw DomainError("mr_partial_sum: need Re s > 1");
  BigRational y0(pow2z(static_cast<unsigned long>(s - 1)));
  auto pt = build_point_table(Variant::MR, N, BigRational(s - 1), y0);
  return accumulate_terms(Variant::MR, N, pt.psi, BigRational(1));
}

SeriesResult<BigFloat> mr_partial_sum(const BigFloat& s, int N, long prec) {
  if (!(s > BigFloat(1, s.precision()))) throw DomainError("mr_partial_sum: need Re s > 1");
  long wp = prec + BigFloat::kGuardBits;
  BigFloat x0 = s.with_precision(wp) - BigFloat(1, wp);
  BigFloat y0 = x0.exp2();
  auto pt = build_point_table(Variant::MR, N, x0, y0, prec);
  return accumulate_terms(Variant::MR, N, pt.psi, BigFloat(1, wp));
}

SeriesResult<BigFloat> mr_partial_sum(const BigFloat& s, int N, const CoeffTable& table,
                                      long prec) {
  if (!(s > BigFloat(1, s.precision()))) throw DomainError("mr_partial_sum: need Re s > 1");
  require_order(table, Variant::MR, N);
  long wp = prec + BigFloat::kGuardBits;
  BigFloat x0 = s.with_precision(wp) - BigFloat(1, wp);
  BigFloat y0 = x0.exp2();
  std::vector<BigFloat> vals;
  vals.reserve(static_cast<size_t>(N) + 1);
  for (int j = 0; j <= N; ++j)
    vals.push_back(rf_eval_float(table.psi[static_cast<size_t>(j)], x0, y0, wp));
  return accumulate_terms(Variant::MR, N, vals, BigFloat(1, wp));
}

SeriesResult<BigComplex> mr_partial_sum(const BigComplex& s, int N, long prec) {
  if (!(s.re > BigFloat(1, s.precision()))) throw DomainError("mr_partial_sum: need Re s > 1");
  long wp = prec + BigFloat::kGuardBits;
  BigComplex x0(s.re.with_precision(wp) - BigFloat(1, wp), s.im.with_precision(wp));
  BigComplex y0 = pow2_complex(x0, wp);
  auto pt = build_point_table(Variant::MR, N, x0, y0, prec);
  return accumulate_terms(Variant::MR, N, pt.psi, BigComplex(1, wp));
}

SeriesResult<BigComplex> mr_partial_sum(const BigComplex& s, int N, const CoeffTable& table,
                                        long prec) {
  if (!(s.re > BigFloat(1, s.precision()))) throw DomainError("mr_partial_sum: need Re s > 1");
  require_order(table, Variant::MR, N);
  long wp = prec + BigFloat::kGuardBits;
  BigComplex x0(s.re.with_precision(wp) - BigFloat(1, wp), s.im.with_precision(wp));
  BigComplex y0 = pow2_complex(x0, wp);
  std::vector<BigComplex> vals;
  vals.reserve(static_cast<size_t>(N) + 1);
  for (int j = 0; j <= N; ++j)
    vals.push_back(rf_eval_float(table.psi[static_cast<size_t>(j)], x0, y0, wp));
  return accumulate_terms(Variant::MR, N, vals, BigComplex(1, wp));
}

std::pair<BigRational, BigRational> klevy_linear_form(int N, const CoeffTable& table) {
  require_order(table, Variant::MR, N);
  BigRational x0(1), y0(2);
  BigRational a(0), b(0);
  for (int j = 0; j <= N; ++j) {
    const RatFunc2& lam = table.psi[static_cast<size_t>(j)];
    BigRational dy = rf_eval_exact(rf_partial(lam, Var::Y), x0, y0);
    BigRational dx = rf_eval_exact(rf_partial(lam, Var::X), x0, y0);
    if (j % 2 == 0) {
      a += 2 * dy;
      b += dx;
    } else {
      a -= 2 * dy;
      b -= dx;
    }
  }
  return {a, b};
}

HensleyEstimate hensley_estimate(int N, const CoeffTable& table, long prec) {
  if (N < 2) throw DomainError("hensley_estimate: need N >= 2");
  require_order(table, Variant::MR, N);
  BigRational x0(1), y0(2);

  // F, F' = a*log2 + b, F'' = c0 + c1*log2 + c2*log2^2, all exact.
  BigRational f(0);
  auto [a, b] = klevy_linear_form(N, table);
  BigRational c0(0), c1(0), c2(0);
  for (int j = 0; j <= N; ++j) {
    const RatFunc2& lam = table.psi[static_cast<size_t>(j)];
    int sgn = (j % 2 == 0) ? 1 : -1;
    f += sgn * rf_eval_exact(lam, x0, y0);
    RatFunc2 ly = rf_partial(lam, Var::Y);
    c0 += sgn * rf_eval_exact(rf_partial(lam, Var::X, 2), x0, y0);
    c1 += sgn * 4 * rf_eval_exact(rf_partial(rf_partial(lam, Var::X), Var::Y), x0, y0);
    c2 += sgn * (4 * rf_eval_exact(rf_partial(ly, Var::Y), x0, y0) +
                 2 * rf_eval_exact(ly, x0, y0));
  }

  long wp = prec + BigFloat::kGuardBits;
  BigFloat l2 = BigFloat::log2(wp);
  BigFloat F(f, wp);
  BigFloat Fp = BigFloat(a, wp) * l2 + BigFloat(b, wp);
  BigFloat Fpp = BigFloat(c0, wp) + BigFloat(c1, wp) * l2 + BigFloat(c2, wp) * l2 * l2;

  HensleyEstimate h;
  BigFloat F2 = F * F;
  h.lambda1_prime = -Fp / F2;
  h.lambda1_second = (BigFloat(2, wp) * Fp * Fp - F * Fpp) / (F2 * F);
  BigFloat pi6 = BigFloat::pi(wp).pow_si(6);
  h.value = (h.lambda1_prime * h.lambda1_prime - h.lambda1_second) /
            (pi6 * h.lambda1_prime.pow_si(3));
  h.value = h.value.with_precision(prec);
  h.lambda1_prime = h.lambda1_prime.with_precision(prec);
  h.lambda1_second = h.lambda1_second.with_precision(prec);
  return h;
}

}  // namespace gkw
