#include <gkw/point_engine.hpp>

#include <gkw/errors.hpp>

#include "engine_impl.hpp"

#include <map>

namespace gkw {

namespace {

template <class S>
struct ScalarOps;

template <>
struct ScalarOps<BigRational> {
  static BigRational from_q(const BigRational& q, long) { return q; }
  static bool is_zero(const BigRational& v) { return v == 0; }
};

template <>
struct ScalarOps<BigFloat> {
  static BigFloat from_q(const BigRational& q, long prec) { return BigFloat(q, prec); }
  static bool is_zero(const BigFloat& v) { return v.is_zero(); }
};

template <>
struct ScalarOps<BigComplex> {
  static BigComplex from_q(const BigRational& q, long prec) { return BigComplex(q, prec); }
  static bool is_zero(const BigComplex& v) { return v.is_zero(); }
};

template <class S>
class PointCtx {
 public:
  using Value = S;

  PointCtx(Variant v, int N, S x0, S y0, long prec)
      : variant_(v), prec_(prec), table_() {
    table_.variant = v;
    table_.N = N;
    table_.x0 = x0;
    table_.y0 = y0;
    table_.psi.assign(static_cast<size_t>(N) + 1, from_q(0));
    table_.grid.assign(static_cast<size_t>(N) + 1,
                       std::vector<S>(static_cast<size_t>(N) + 1, from_q(0)));
  }

  Variant variant() const { return variant_; }
  S from_q(const BigRational& q) const { return ScalarOps<S>::from_q(q, prec_); }
  S zero() const { return from_q(0); }

  const S& psi(int j) const { return table_.psi[static_cast<size_t>(j)]; }
  const S& cell(int k, int i) const {
    return table_.grid[static_cast<size_t>(k)][static_cast<size_t>(i)];
  }

  // C(x0 + shift, r) by the product formula, cached.
  S binom(long shift, long r) {
    if (r < 0) return zero();
    auto key = std::make_pair(shift, r);
    auto it = binoms_.find(key);
    if (it != binoms_.end()) return it->second;
    S acc = from_q(1);
    for (long q = 0; q < r; ++q) acc = acc * (table_.x0 + from_q(BigRational(shift - q)));
    acc = acc * from_q(BigRational(1, factorial(static_cast<unsigned long>(r))));
    binoms_.emplace(key, acc);
    return acc;
  }
  S affine(long c) { return table_.x0 + from_q(BigRational(c)); }

  static S mul(const S& a, const S& b) { return a * b; }
  S scale(const S& v, const BigRational& q) const { return v * from_q(q); }

  S sum(std::vector<S> ts) const {
    // Balanced reduction keeps exact-rational gcd costs down.
    if (ts.empty()) return zero();
    while (ts.size() > 1) {
      size_t half = ts.size() / 2;
      for (size_t i = 0; i < half; ++i) ts[i] = ts[i] + ts[ts.size() - 1 - i];
      ts.resize(ts.size() - half);
    }
    return ts[0];
  }

  bool equals_constant(const S& v, const BigRational& q) const {
    return ScalarOps<S>::is_zero(v - from_q(q));
  }

  S solve_divide(S rhs, const BigInt& a, const BigInt& b) const {
    S coef = table_.y0 * from_q(BigRational(a)) + from_q(BigRational(b));
    if constexpr (std::is_same_v<S, BigRational>) {
      if (coef == 0) {
        if (rhs == 0) return rhs;
        throw PoleError("specialized solve: coefficient vanishes at this point");
      }
      return rhs / coef;
    } else {
      BigFloat mag = coef.abs();
      BigInt aa = a < 0 ? BigInt(-a) : a;
      BigInt ab = b < 0 ? BigInt(-b) : b;
      BigFloat scale = table_.y0.abs() * BigFloat(BigRational(aa), prec_) +
                       BigFloat(BigRational(ab), prec_) + BigFloat(1, prec_);
      if (mag <= scale.mul_2si(-prec_)) {
        if (ScalarOps<S>::is_zero(rhs)) return rhs;
        throw NearPoleError("specialized solve: coefficient underflows at this point");
      }
      return rhs / coef;
    }
  }

  void init_seeds() {
    table_.grid[0][0] = from_q(1);
    table_.psi[0] = table_.y0 * from_q(2) - from_q(2);
  }
  void solve(int p, int t) { detail::solve_cell_generic(*this, p, t); }
  void store_psi(int j, S v) { table_.psi[static_cast<size_t>(j)] = std::move(v); }
  void store_cell(int p, int t, S v) {
    table_.grid[static_cast<size_t>(p)][static_cast<size_t>(t)] = std::move(v);
  }

  PointTable<S> take() { return std::move(table_); }

 private:
  Variant variant_;
  long prec_;
  PointTable<S> table_;
  std::map<std::pair<long, long>, S> binoms_;
};

}  // namespace

PointTable<BigRational> build_point_table(Variant v, int N, const BigRational& x0,
                                          const BigRational& y0) {
  PointCtx<BigRational> ctx(v, N, x0, y0, 0);
  detail::run_procedure(ctx, N);
  return ctx.take();
}

PointTable<BigFloat> build_point_table(Variant v, int N, const BigFloat& x0, const BigFloat& y0,
                                       long prec) {
  long wp = prec + BigFloat::kGuardBits;
  PointCtx<BigFloat> ctx(v, N, x0.with_precision(wp), y0.with_precision(wp), wp);
  detail::run_procedure(ctx, N);
  return ctx.take();
}

PointTable<BigComplex> build_point_table(Variant v, int N, const BigComplex& x0,
                                         const BigComplex& y0, long prec) {
  long wp = prec + BigFloat::kGuardBits;
  BigComplex xw(x0.re.with_precision(wp), x0.im.with_precision(wp));
  BigComplex yw(y0.re.with_precision(wp), y0.im.with_precision(wp));
  PointCtx<BigComplex> ctx(v, N, xw, yw, wp);
  detail::run_procedure(ctx, N);
  return ctx.take();
}

}  // namespace gkw
