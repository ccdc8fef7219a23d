#include <gkw/engine.hpp>

#include <gkw/errors.hpp>

#include "engine_impl.hpp"

#include <map>

namespace gkw {

const char* variant_name(Variant v) { return v == Variant::GKW ? "GKW" : "MR"; }

namespace {

// Symbolic context: values are canonical RatFunc2, binomials are cached
// polynomials in X.
class SymbolicCtx {
 public:
  using Value = RatFunc2;

  SymbolicCtx(TableBuilder& b) : b_(b) {}

  Variant variant() const { return b_.variant(); }
  Value zero() const { return RatFunc2(); }

  const Value& psi(int j) const { return b_.psi(j); }
  const Value& cell(int k, int i) const { return b_.cell(k, i); }

  Value binom(long shift, long r) {
    auto key = std::make_pair(shift, r);
    auto it = binoms_.find(key);
    if (it == binoms_.end()) it = binoms_.emplace(key, RatFunc2(poly_binom(shift, r))).first;
    return it->second;
  }
  Value affine(long c) {
    BiPoly p;
    p.add_term(BigRational(1), 1, 0);
    p.add_term(BigRational(c), 0, 0);
    return RatFunc2(std::move(p));
  }
  static Value mul(const Value& a, const Value& b) { return a * b; }
  static Value scale(const Value& v, const BigRational& q) { return v.scaled(q); }
  Value sum(std::vector<Value> ts) const { return rf_add_many(std::move(ts)); }
  static bool equals_constant(const Value& v, const BigRational& q) {
    return v.den_is_one() && v.num().is_constant() && v.num().constant_value() == q;
  }
  static Value solve_divide(Value rhs, const BigInt& a, const BigInt& b) {
    return rhs.divided_by_linear(a, b);
  }

  void init_seeds() {
    if (!b_.cell_filled(0, 0)) b_.set_cell(0, 0, RatFunc2::one());
    if (!b_.psi_filled(0)) {
      BiPoly p;
      p.add_term(BigRational(2), 0, 1);
      p.add_term(BigRational(-2), 0, 0);
      b_.set_psi(0, RatFunc2(std::move(p)));
    }
  }
  void solve(int p, int t) {
    if (p == t ? (b_.psi_filled(p) && b_.cell_filled(p, t)) : b_.cell_filled(p, t)) return;
    detail::solve_cell_generic(*this, p, t);
  }
  void store_psi(int j, Value v) { b_.set_psi(j, std::move(v)); }
  void store_cell(int p, int t, Value v) { b_.set_cell(p, t, std::move(v)); }

 private:
  TableBuilder& b_;
  std::map<std::pair<long, long>, RatFunc2> binoms_;
};

}  // namespace

TableBuilder::TableBuilder(Variant v, int N) : variant_(v), n_(N) {
  psi_.resize(static_cast<size_t>(N) + 1);
  grid_.assign(static_cast<size_t>(N) + 1,
               std::vector<std::optional<RatFunc2>>(static_cast<size_t>(N) + 1));
}

bool TableBuilder::cell_filled(int p, int t) const {
  return grid_[static_cast<size_t>(p)][static_cast<size_t>(t)].has_value();
}
bool TableBuilder::psi_filled(int j) const { return psi_[static_cast<size_t>(j)].has_value(); }

void TableBuilder::set_cell(int p, int t, RatFunc2 f) {
  grid_[static_cast<size_t>(p)][static_cast<size_t>(t)] = std::move(f);
}
void TableBuilder::set_psi(int j, RatFunc2 f) { psi_[static_cast<size_t>(j)] = std::move(f); }

const RatFunc2& TableBuilder::cell(int p, int t) const {
  const auto& c = grid_[static_cast<size_t>(p)][static_cast<size_t>(t)];
  if (!c)
    throw MissingDependency("cell (" + std::to_string(p) + "," + std::to_string(t) +
                            ") has not been solved yet");
  return *c;
}
const RatFunc2& TableBuilder::psi(int j) const {
  const auto& c = psi_[static_cast<size_t>(j)];
  if (!c) throw MissingDependency("psi[" + std::to_string(j) + "] has not been solved yet");
  return *c;
}

void TableBuilder::solve_cell(int p, int t) {
  SymbolicCtx ctx(*this);
  ctx.init_seeds();
  detail::solve_cell_generic(ctx, p, t);
}

CoeffTable TableBuilder::freeze() {
  CoeffTable out;
  out.variant = variant_;
  out.N = n_;
  out.psi.reserve(psi_.size());
  for (auto& p : psi_) {
    if (!p) throw MissingDependency("freeze: psi list incomplete");
    out.psi.push_back(std::move(*p));
  }
  out.grid.resize(grid_.size());
  for (size_t p = 0; p < grid_.size(); ++p) {
    out.grid[p].reserve(grid_[p].size());
    for (auto& c : grid_[p]) {
      if (!c) throw MissingDependency("freeze: grid incomplete");
      out.grid[p].push_back(std::move(*c));
    }
  }
  return out;
}

CoeffTable build_table(Variant v, int N, CacheStore* cache) {
  TableBuilder b(v, N);
  std::vector<bool> psi_loaded(static_cast<size_t>(N) + 1, false);
  std::vector<std::vector<bool>> cell_loaded(
      static_cast<size_t>(N) + 1, std::vector<bool>(static_cast<size_t>(N) + 1, false));
  if (cache) {
    auto candidates = engine_factor_candidates(N + 2);
    for (int j = 0; j <= N; ++j)
      if (auto f = cache->load_psi(v, j)) {
        b.set_psi(j, f->with_factored_den(candidates));
        psi_loaded[static_cast<size_t>(j)] = true;
      }
    for (int p = 0; p <= N; ++p)
      for (int t = 0; t <= N; ++t)
        if (auto f = cache->load_cell(v, p, t)) {
          b.set_cell(p, t, f->with_factored_den(candidates));
          cell_loaded[static_cast<size_t>(p)][static_cast<size_t>(t)] = true;
        }
  }
  SymbolicCtx ctx(b);
  detail::run_procedure(ctx, N);
  CoeffTable out = b.freeze();
  if (cache) {
    for (int j = 0; j <= N; ++j)
      if (!psi_loaded[static_cast<size_t>(j)]) cache->save_psi(v, j, out.psi[static_cast<size_t>(j)]);
    for (int p = 0; p <= N; ++p)
      for (int t = 0; t <= N; ++t)
        if (!cell_loaded[static_cast<size_t>(p)][static_cast<size_t>(t)])
          cache->save_cell(v, p, t, out.cell(p, t));
  }
  return out;
}

namespace {

// Read-only context over a frozen table for the residual checks.
class FrozenCtx {
 public:
  using Value = RatFunc2;
  explicit FrozenCtx(const CoeffTable& t) : t_(t) {}
  Variant variant() const { return t_.variant; }
  Value zero() const { return RatFunc2(); }
  const Value& psi(int j) const { return t_.psi[static_cast<size_t>(j)]; }
  const Value& cell(int k, int i) const { return t_.cell(k, i); }
  Value binom(long shift, long r) { return RatFunc2(poly_binom(shift, r)); }
  Value affine(long c) {
    BiPoly p;
    p.add_term(BigRational(1), 1, 0);
    p.add_term(BigRational(c), 0, 0);
    return RatFunc2(std::move(p));
  }
  static Value mul(const Value& a, const Value& b) { return a * b; }
  static Value scale(const Value& v, const BigRational& q) { return v.scaled(q); }
  Value sum(std::vector<Value> ts) const { return rf_add_many(std::move(ts)); }

 private:
  const CoeffTable& t_;
};

RatFunc2 lhs_of(const CoeffTable& table, int p, int t) {
  BiPoly c;
  c.add_term(pow2q(p), 0, 1);
  c.add_term(-pow2q(t), 0, 0);
  return RatFunc2(std::move(c)) * table.cell(p, t);
}

}  // namespace

bool residual_zero(const CoeffTable& table, int p, int t) {
  FrozenCtx ctx(table);
  auto a = detail::assemble_rhs(ctx, p, t, /*skip_self=*/false, detail::PsiTerm::include);
  RatFunc2 rhs = ctx.sum(std::move(a.rest));
  return (lhs_of(table, p, t) - rhs).is_zero();
}

bool relaxed_bound_matches(const CoeffTable& table, int p, int t) {
  FrozenCtx ctx(table);
  auto a = detail::assemble_rhs(ctx, p, t, false, detail::PsiTerm::include, false);
  auto b = detail::assemble_rhs(ctx, p, t, false, detail::PsiTerm::include, true);
  return (ctx.sum(std::move(a.rest)) - ctx.sum(std::move(b.rest))).is_zero();
}

}  // namespace gkw
