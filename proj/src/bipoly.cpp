#include <gkw/bipoly.hpp>

#include <gkw/binom.hpp>
#include <gkw/errors.hpp>

#include <algorithm>
#include <tuple>

namespace gkw {

BiPoly BiPoly::from_terms(const std::vector<std::tuple<BigRational, int, int>>& ts) {
  BiPoly p;
  for (const auto& [c, dx, dy] : ts) p.add_term(c, dx, dy);
  return p;
}

void BiPoly::add_term(const BigRational& c, int dx, int dy) {
  if (c == 0) return;
  Exp2 e{dx, dy};
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigRational BiPoly::constant_value() const {
  if (terms_.empty()) return BigRational(0);
  auto it = terms_.find(Exp2{0, 0});
  return it == terms_.end() ? BigRational(0) : it->second;
}

int BiPoly::deg_x() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.dx);
  return d;
}

int BiPoly::deg_y() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.dy);
  return d;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  BiPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(c, e.dx, e.dy);
  return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
  BiPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(-c, e.dx, e.dy);
  return r;
}

BiPoly BiPoly::operator-() const {
  BiPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

BiPoly BiPoly::scaled(const BigRational& c) const {
  BiPoly r;
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
  return r;
}

// Dense schoolbook product on an integer grid. Rational content is split
// off first so the inner loop is pure mpz_addmul.
BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return BiPoly();
  if (a.is_constant()) return b.scaled(a.constant_value());
  if (b.is_constant()) return a.scaled(b.constant_value());

  auto densify = [](const BiPoly& p, BigInt& denom) {
    denom = 1;
    for (const auto& [e, c] : p.terms())
      mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<std::pair<Exp2, BigInt>> out;
    out.reserve(p.term_count());
    for (const auto& [e, c] : p.terms())
      out.emplace_back(e, BigInt(c.get_num() * (denom / c.get_den())));
    return out;
  };

  BigInt da, db;
  auto ta = densify(a, da);
  auto tb = densify(b, db);

  int ax = a.deg_x(), ay = a.deg_y(), bx = b.deg_x(), by = b.deg_y();
  size_t width = static_cast<size_t>(ay + by + 1);
  std::vector<BigInt> grid(static_cast<size_t>(ax + bx + 1) * width);
  for (const auto& [ea, ca] : ta)
    for (const auto& [eb, cb] : tb)
      mpz_addmul(grid[static_cast<size_t>(ea.dx + eb.dx) * width + static_cast<size_t>(ea.dy + eb.dy)]
                     .get_mpz_t(),
                 ca.get_mpz_t(), cb.get_mpz_t());

  BigInt dd = da * db;
  BiPoly r;
  for (int dx = ax + bx; dx >= 0; --dx)
    for (int dy = ay + by; dy >= 0; --dy) {
      BigInt& g = grid[static_cast<size_t>(dx) * width + static_cast<size_t>(dy)];
      if (g == 0) continue;
      BigRational c(std::move(g));
      c /= BigRational(dd);
      c.canonicalize();
      r.terms_.emplace_hint(r.terms_.end(), Exp2{dx, dy}, std::move(c));
    }
  return r;
}

BiPoly BiPoly::derivative_x() const {
  BiPoly r;
  for (const auto& [e, c] : terms_)
    if (e.dx > 0) r.terms_.emplace(Exp2{e.dx - 1, e.dy}, c * e.dx);
  return r;
}

BiPoly BiPoly::derivative_y() const {
  BiPoly r;
  for (const auto& [e, c] : terms_)
    if (e.dy > 0) r.terms_.emplace(Exp2{e.dx, e.dy - 1}, c * e.dy);
  return r;
}

namespace {

// Power tables keep evaluation at O(deg) multiplies.
template <class S>
std::vector<S> powers(const S& base, int top, const S& one) {
  std::vector<S> p;
  p.reserve(static_cast<size_t>(top) + 1);
  p.push_back(one);
  for (int i = 1; i <= top; ++i) p.push_back(p.back() * base);
  return p;
}

template <class S>
S eval_generic(const BiPoly::TermMap& terms, const S& x, const S& y, const S& one,
               int degx, int degy) {
  auto px = powers(x, degx, one);
  auto py = powers(y, degy, one);
  S acc = one - one;
  for (const auto& [e, c] : terms) {
    S t = px[static_cast<size_t>(e.dx)] * py[static_cast<size_t>(e.dy)];
    if constexpr (std::is_same_v<S, BigRational>) {
      acc += t * c;
    } else if constexpr (std::is_same_v<S, BigFloat>) {
      acc += t * BigFloat(c, x.precision());
    } else {
      acc += t * S(BigFloat(c, x.precision()), BigFloat(x.precision()));
    }
  }
  return acc;
}

}  // namespace

BigRational BiPoly::eval(const BigRational& x, const BigRational& y) const {
  return eval_generic<BigRational>(terms_, x, y, BigRational(1), deg_x(), deg_y());
}

BigFloat BiPoly::eval(const BigFloat& x, const BigFloat& y) const {
  long prec = std::min(x.precision(), y.precision());
  return eval_generic<BigFloat>(terms_, x, y, BigFloat(1, prec), deg_x(), deg_y());
}

BigComplex BiPoly::eval(const BigComplex& x, const BigComplex& y) const {
  long prec = std::min(x.precision(), y.precision());
  return eval_generic<BigComplex>(terms_, x, y, BigComplex(1, prec), deg_x(), deg_y());
}

BiPoly BiPoly::eval_y(const BigRational& y) const {
  auto py = powers(y, deg_y(), BigRational(1));
  BiPoly r;
  for (const auto& [e, c] : terms_) r.add_term(c * py[static_cast<size_t>(e.dy)], e.dx, 0);
  return r;
}

BigRational BiPoly::content() const {
  if (terms_.empty()) return BigRational(0);
  BigInt num_gcd = 0, den_lcm = 1;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  BigRational c(num_gcd, den_lcm);
  c.canonicalize();
  // Leading term decides the sign so the primitive part has positive lead.
  if (terms_.begin()->second < 0) c = -c;
  return c;
}

BiPoly poly_binom(long shift, long k) {
  if (k < 0) return BiPoly();
  // Expand prod (X + shift - i), then divide by k!.
  std::vector<BigRational> coef{BigRational(1)};  // coef[d] of X^d
  for (long i = 0; i < k; ++i) {
    BigRational s(shift - i);
    coef.push_back(BigRational(0));
    for (size_t d = coef.size() - 1; d > 0; --d) coef[d] = coef[d - 1] + coef[d] * s;
    coef[0] *= s;
  }
  BigRational kfac(factorial(static_cast<unsigned long>(k)));
  BiPoly p;
  for (size_t d = 0; d < coef.size(); ++d)
    if (coef[d] != 0) p.add_term(coef[d] / kfac, static_cast<int>(d), 0);
  return p;
}

// ---------------------------------------------------------------------------
// PolyY

PolyY::PolyY(BiPoly expanded) : poly_(std::move(expanded)) {
  if (poly_.deg_x() != 0)
    throw InternalInconsistency("PolyY: denominator contains X");
  if (poly_.is_zero()) return;  // caller (RatFunc2) rejects zero dens
  if (poly_.is_constant() && poly_.constant_value() == 1) factors_.emplace();
}

void PolyY::expand_from_factors() {
  BiPoly p(BigRational(1));
  for (const auto& f : *factors_) {
    BiPoly lin;
    lin.add_term(BigRational(f.a), 0, 1);
    lin.add_term(BigRational(f.b), 0, 0);
    for (int i = 0; i < f.mult; ++i) p = p * lin;
  }
  poly_ = std::move(p);
}

PolyY PolyY::from_factors(std::vector<LinFactor> fs) {
  PolyY d;
  // Merge duplicates; keep a stable order (by a then b) for determinism.
  std::sort(fs.begin(), fs.end(), [](const LinFactor& u, const LinFactor& v) {
    if (u.a != v.a) return u.a < v.a;
    return u.b < v.b;
  });
  std::vector<LinFactor> merged;
  for (auto& f : fs) {
    if (f.mult == 0) continue;
    if (!merged.empty() && merged.back().a == f.a && merged.back().b == f.b)
      merged.back().mult += f.mult;
    else
      merged.push_back(f);
  }
  d.factors_ = std::move(merged);
  d.expand_from_factors();
  return d;
}

bool PolyY::is_one() const {
  return poly_.is_constant() && poly_.constant_value() == 1;
}

PolyY PolyY::lcm(const PolyY& a, const PolyY& b) {
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  if (a.factors_ && b.factors_) {
    std::vector<LinFactor> fs = *a.factors_;
    for (const auto& g : *b.factors_) {
      bool found = false;
      for (auto& f : fs)
        if (f.a == g.a && f.b == g.b) {
          f.mult = std::max(f.mult, g.mult);
          found = true;
          break;
        }
      if (!found) fs.push_back(g);
    }
    return from_factors(std::move(fs));
  }
  // No factored view: fall back to the product (a valid common multiple;
  // normalization cancels any excess afterwards).
  return mul(a, b);
}

PolyY PolyY::mul(const PolyY& a, const PolyY& b) {
  if (a.factors_ && b.factors_) {
    std::vector<LinFactor> fs = *a.factors_;
    fs.insert(fs.end(), b.factors_->begin(), b.factors_->end());
    return from_factors(std::move(fs));
  }
  PolyY r(a.poly_ * b.poly_);
  r.factors_.reset();
  if (r.poly_.is_constant()) r.factors_.emplace();
  return r;
}

PolyY PolyY::divide_exact(const PolyY& g) const {
  if (g.is_one()) return *this;
  if (factors_ && g.factors_) {
    std::vector<LinFactor> fs = *factors_;
    for (const auto& f : *g.factors_) {
      bool found = false;
      for (auto& h : fs)
        if (h.a == f.a && h.b == f.b && h.mult >= f.mult) {
          h.mult -= f.mult;
          found = true;
          break;
        }
      if (!found)
        throw InternalInconsistency("PolyY::divide_exact: factor not present");
    }
    std::erase_if(fs, [](const LinFactor& f) { return f.mult == 0; });
    return from_factors(std::move(fs));
  }
  // Generic synthetic division path.
  BiPoly q = poly_;
  if (g.factors_) {
    for (const auto& f : *g.factors_)
      for (int i = 0; i < f.mult; ++i) q = divide_linear_y(q, f.a, f.b);
    PolyY r(std::move(q));
    return r;
  }
  throw InternalInconsistency("PolyY::divide_exact: unfactored divisor");
}

bool PolyY::adopt_factors_from(const std::vector<LinFactor>& candidates) {
  if (factors_) return true;
  BiPoly rest = poly_;
  std::vector<LinFactor> got;
  for (const auto& c : candidates) {
    int mult = 0;
    while (divisible_linear_y(rest, c.a, c.b)) {
      rest = divide_linear_y(rest, c.a, c.b);
      ++mult;
    }
    if (mult > 0) got.push_back({c.a, c.b, mult});
  }
  if (!rest.is_constant() || rest.constant_value() != 1) return false;
  factors_ = std::move(got);
  std::sort(factors_->begin(), factors_->end(), [](const LinFactor& u, const LinFactor& v) {
    if (u.a != v.a) return u.a < v.a;
    return u.b < v.b;
  });
  return true;
}

// ---------------------------------------------------------------------------

bool divisible_linear_y(const BiPoly& p, const BigInt& a, const BigInt& b) {
  if (p.is_zero()) return true;
  if (b == 0) {
    // Factor a*Y: every term needs dy >= 1.
    for (const auto& [e, c] : p.terms())
      if (e.dy == 0) return false;
    return true;
  }
  // p divisible by (aY + b) iff p(X, -b/a) == 0, slice by X degree.
  BigRational root(-b, a);
  root.canonicalize();
  std::map<int, BigRational> slice_val;
  std::map<int, BigRational> rp;  // root powers cache
  for (const auto& [e, c] : p.terms()) {
    auto it = rp.find(e.dy);
    if (it == rp.end()) {
      BigRational v;
      mpz_pow_ui(v.get_num_mpz_t(), root.get_num().get_mpz_t(), static_cast<unsigned long>(e.dy));
      mpz_pow_ui(v.get_den_mpz_t(), root.get_den().get_mpz_t(), static_cast<unsigned long>(e.dy));
      it = rp.emplace(e.dy, v).first;
    }
    slice_val[e.dx] += c * it->second;
  }
  for (const auto& [dx, v] : slice_val)
    if (v != 0) return false;
  return true;
}

BiPoly divide_linear_y(const BiPoly& p, const BigInt& a, const BigInt& b) {
  if (p.is_zero()) return p;
  // Split into X-slices, synthetic-divide each by (aY + b).
  std::map<int, std::vector<BigRational>> slices;  // dx -> coeffs by dy
  int degy = p.deg_y();
  for (const auto& [e, c] : p.terms()) {
    auto& v = slices[e.dx];
    if (v.empty()) v.assign(static_cast<size_t>(degy) + 1, BigRational(0));
    v[static_cast<size_t>(e.dy)] = c;
  }
  BigRational ar(a), br(b);
  BiPoly q;
  for (auto& [dx, v] : slices) {
    // p(Y) = (aY+b) q(Y) + r ; q[k] = (p[k+1] - a-run carry)...
    // Iterate from the top: q[d-1] = p[d]/a ; p[d-1] -= q[d-1]*b.
    std::vector<BigRational> qq(static_cast<size_t>(degy), BigRational(0));
    for (int d = degy; d >= 1; --d) {
      BigRational top = v[static_cast<size_t>(d)];
      BigRational qd = top / ar;
      qq[static_cast<size_t>(d - 1)] = qd;
      v[static_cast<size_t>(d - 1)] -= qd * br;
    }
    if (v[0] != 0)
      throw InternalInconsistency("divide_linear_y: not divisible");
    for (int d = 0; d < degy; ++d)
      if (qq[static_cast<size_t>(d)] != 0) q.add_term(qq[static_cast<size_t>(d)], dx, d);
  }
  return q;
}

}  // namespace gkw
