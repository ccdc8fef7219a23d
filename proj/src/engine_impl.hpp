// Shared cell assembly for the recurrence. Both the symbolic engine
// (values are RatFunc2) and the point-specialized engines (values are
// BigRational / BigFloat / BigComplex scalars) instantiate the same index
// logic, so the two paths cannot drift apart.
#ifndef GKW_SRC_ENGINE_IMPL_HPP
#define GKW_SRC_ENGINE_IMPL_HPP

#include <gkw/binom.hpp>
#include <gkw/engine.hpp>
#include <gkw/errors.hpp>

#include <algorithm>
#include <vector>

namespace gkw::detail {

// What to do with the Psi_P term of a diagonal cell (k,j,i) = (0,P,0).
enum class PsiTerm {
  include,  // multiply by psi[P] and keep (residual check; needs psi[P])
  collect,  // collect its factor separately (the psi solve)
};

template <class Ctx>
struct Assembled {
  std::vector<typename Ctx::Value> rest;
  std::vector<typename Ctx::Value> psi_coef;  // factors at Psi_P, sans psi
};

// Right-hand side of the recurrence at cell (p,t). `skip_self` drops the
// (k,j,i) = (p,0,t) term whose combined coefficient the solve moves to the
// left. `relaxed_sum2` lowers the second sum's i-bound to 0 (property
// check; the integer binomial's zero convention must make it a no-op).
template <class Ctx>
Assembled<Ctx> assemble_rhs(Ctx& ctx, int p, int t, bool skip_self, PsiTerm psi_term,
                            bool relaxed_sum2 = false) {
  using V = typename Ctx::Value;
  const Variant variant = ctx.variant();
  Assembled<Ctx> out;

  for (int k = 0; k <= p; ++k) {
    const int jmax = std::min(p - k, t);
    for (int j = 0; j <= jmax; ++j) {
      for (int i = 0; i <= t - j; ++i) {
        const bool is_self = (k == p && j == 0 && i == t);
        if (is_self && skip_self) continue;
        const bool is_diag_psi = (p == t && k == 0 && j == p && i == 0 && p > 0);

        BigRational sc = pow2q(i + j - 1);
        if ((k + i) % 2) sc = -sc;

        V factor = ctx.binom(p - i - j, p - j - k);
        if (variant == Variant::GKW) {
          factor = ctx.mul(factor, ctx.binom(k - i - 1, t - i - j));
        } else {
          BigInt u = gen_binom(k - i, t - i - j);
          if (u == 0) continue;
          sc *= BigRational(u);
        }

        if (is_diag_psi && psi_term == PsiTerm::collect) {
          out.psi_coef.push_back(ctx.scale(factor, sc));
          continue;
        }
        V term = ctx.mul(ctx.mul(factor, ctx.cell(k, i)), ctx.psi(j));
        out.rest.push_back(ctx.scale(term, sc));
      }
    }
  }

  for (int k = 0; k <= p - 1; ++k) {
    const int ilo = relaxed_sum2 ? 0 : std::max(0, k + t - p);
    for (int i = ilo; i <= t - 1; ++i) {
      BigInt b2 = int_binom(p - k - 1, p + i - k - t);
      if (b2 == 0) continue;
      BigRational sc(b2 * pow2z(static_cast<unsigned long>(i)), t - i);
      sc.canonicalize();
      if ((p + k) % 2) sc = -sc;
      V term = ctx.mul(ctx.mul(ctx.affine(p - t), ctx.binom(p - i - 1, p - k - 1)), ctx.cell(k, i));
      out.rest.push_back(ctx.scale(term, sc));
    }
  }

  for (int k = 0; k <= p - 1; ++k) {
    BigRational sc(pow2z(static_cast<unsigned long>(t)));
    if ((p + k) % 2) sc = -sc;
    V term = ctx.mul(ctx.binom(p - t, p - k), ctx.cell(k, t));
    out.rest.push_back(ctx.scale(term, sc));
  }
  return out;
}

// The coefficient the solve isolates on the left:
// 2^p*Y - Y*(-1)^(p-t)*2^t - 2^t + (-1)^(p-t)*2^t  =  a*Y + b.
inline void self_coef(int p, int t, BigInt& a, BigInt& b) {
  const bool even = ((p - t) % 2) == 0;
  BigInt tp = pow2z(static_cast<unsigned long>(t));
  a = pow2z(static_cast<unsigned long>(p)) + (even ? -tp : tp);
  b = even ? BigInt(0) : BigInt(-2 * tp);
}

// Fills the table in the canonical order. Ctx supplies storage, arithmetic
// and the solve division.
template <class Ctx>
void run_procedure(Ctx& ctx, int N) {
  ctx.init_seeds();
  for (int P = 0; P <= N; ++P) {
    for (int t = 0; t < P; ++t) ctx.solve(P, t);
    if (P >= 1) ctx.solve(P, P);
    for (int t = P + 1; t <= N; ++t) ctx.solve(P, t);
  }
}

// Shared solve logic on top of a context that knows how to store values.
template <class Ctx>
void solve_cell_generic(Ctx& ctx, int p, int t) {
  using V = typename Ctx::Value;
  if (p == t && p == 0)
    throw InternalInconsistency("cell (0,0) is a seed, not solvable");
  if (p == t) {
    Assembled<Ctx> a = assemble_rhs(ctx, p, t, /*skip_self=*/true, PsiTerm::collect);
    if (a.psi_coef.empty())
      throw InternalInconsistency("diagonal cell lost its Psi term");
    V coef = ctx.sum(std::move(a.psi_coef));
    if (!ctx.equals_constant(coef, pow2q(p - 1)))
      throw InternalInconsistency("Psi coefficient is not 2^(P-1) at P=" + std::to_string(p));
    V rhs = ctx.sum(std::move(a.rest));
    BigRational inv = BigRational(-1) / pow2q(p - 1);
    ctx.store_psi(p, ctx.scale(rhs, inv));
    ctx.store_cell(p, t, ctx.zero());
    return;
  }
  Assembled<Ctx> a = assemble_rhs(ctx, p, t, /*skip_self=*/true, PsiTerm::include);
  V rhs = ctx.sum(std::move(a.rest));
  BigInt ca, cb;
  self_coef(p, t, ca, cb);
  if (ca == 0)
    throw InternalInconsistency("vanishing solve coefficient off the diagonal");
  ctx.store_cell(p, t, ctx.solve_divide(std::move(rhs), ca, cb));
}

}  // namespace gkw::detail

#endif
