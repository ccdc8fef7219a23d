#include <gkw/ratfunc.hpp>

#include <gkw/errors.hpp>

#include <algorithm>
#include <cassert>
#include <sstream>
#include <vector>

namespace gkw {

namespace {

// Univariate helpers over Q for the generic (unfactored) gcd fallback.
using UniPoly = std::vector<BigRational>;  // coeff[d] of Y^d, no trailing zeros

UniPoly to_uni(const BiPoly& p) {
  UniPoly u(static_cast<size_t>(p.deg_y()) + 1, BigRational(0));
  for (const auto& [e, c] : p.terms()) u[static_cast<size_t>(e.dy)] = c;
  while (!u.empty() && u.back() == 0) u.pop_back();
  return u;
}

BiPoly from_uni(const UniPoly& u) {
  BiPoly p;
  for (size_t d = 0; d < u.size(); ++d)
    if (u[d] != 0) p.add_term(u[d], 0, static_cast<int>(d));
  return p;
}

UniPoly uni_rem(UniPoly a, const UniPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    BigRational q = a.back() / b.back();
    size_t off = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= q * b[i];
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
  while (!b.empty()) {
    UniPoly r = uni_rem(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    BigRational lead = a.back();
    for (auto& c : a) c /= lead;  // monic
  }
  return a;
}

// Exact division of p in (Q[X])[Y] by a Y-only divisor g.
BiPoly divide_polyy(const BiPoly& p, const UniPoly& g) {
  if (p.is_zero()) return p;
  if (g.size() == 1) return p.scaled(BigRational(1) / g[0]);
  // Split p into X-slices and long-divide each.
  std::map<int, UniPoly> slices;
  int degy = p.deg_y();
  for (const auto& [e, c] : p.terms()) {
    auto& v = slices[e.dx];
    if (v.empty()) v.assign(static_cast<size_t>(degy) + 1, BigRational(0));
    v[static_cast<size_t>(e.dy)] = c;
  }
  BiPoly out;
  for (auto& [dx, v] : slices) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    if (v.empty()) continue;
    if (v.size() < g.size())
      throw InternalInconsistency("divide_polyy: not divisible (degree)");
    UniPoly q(v.size() - g.size() + 1, BigRational(0));
    for (size_t d = v.size(); d-- >= g.size();) {
      if (v[d] == 0) continue;
      BigRational qq = v[d] / g.back();
      size_t off = d - (g.size() - 1);
      q[off] = qq;
      for (size_t i = 0; i < g.size(); ++i) v[off + i] -= qq * g[i];
    }
    for (const auto& c : v)
      if (c != 0) throw InternalInconsistency("divide_polyy: nonzero remainder");
    for (size_t d = 0; d < q.size(); ++d)
      if (q[d] != 0) out.add_term(q[d], dx, static_cast<int>(d));
  }
  return out;
}

}  // namespace

RatFunc2::RatFunc2(BiPoly num, PolyY den, bool do_normalize)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw InternalInconsistency("RatFunc2: zero denominator");
  if (do_normalize) normalize();
}

void RatFunc2::normalize() {
  if (num_.is_zero()) {
    den_ = PolyY::one();
    return;
  }
  if (den_.has_factors()) {
    // Cancel tracked linear factors by synthetic division.
    bool changed = false;
    std::vector<LinFactor> kept;
    for (const auto& f : den_.factors()) {
      int mult = f.mult;
      while (mult > 0 && divisible_linear_y(num_, f.a, f.b)) {
        num_ = divide_linear_y(num_, f.a, f.b);
        --mult;
        changed = true;
      }
      if (mult > 0) kept.push_back({f.a, f.b, mult});
    }
    if (changed) den_ = PolyY::from_factors(std::move(kept));
  } else if (den_.degree() > 0) {
    // Generic fallback: cancel gcd over Q[Y] of den and all X-slices of num.
    UniPoly g = to_uni(den_.poly());
    std::map<int, UniPoly> slices;
    for (const auto& [e, c] : num_.terms()) {
      auto& v = slices[e.dx];
      if (v.size() < static_cast<size_t>(e.dy) + 1) v.resize(static_cast<size_t>(e.dy) + 1, BigRational(0));
      v[static_cast<size_t>(e.dy)] = c;
    }
    for (auto& [dx, v] : slices) {
      while (!v.empty() && v.back() == 0) v.pop_back();
      g = uni_gcd(std::move(g), v);
      if (g.size() <= 1) break;
    }
    if (g.size() > 1) {
      num_ = divide_polyy(num_, g);
      den_ = PolyY(divide_polyy(den_.poly(), g));
    }
  }
  // Move the denominator's rational content into the numerator so den is a
  // primitive integer polynomial with positive leading coefficient.
  BigRational c = den_.poly().content();
  if (c != 1) {
    if (c == 0) throw InternalInconsistency("RatFunc2: zero denominator");
    num_ = num_.scaled(BigRational(1) / c);
    if (den_.has_factors() && den_.poly().is_constant()) {
      den_ = PolyY::one();
    } else {
      BiPoly scaled_den = den_.poly().scaled(BigRational(1) / c);
      if (den_.has_factors()) {
        // Factors were primitive already; a nontrivial content can only be
        // a scalar left by construction, which from_factors never produces.
        den_ = PolyY(std::move(scaled_den));
        std::vector<LinFactor> cands;
        cands.push_back({BigInt(1), BigInt(0), 1});
        den_.adopt_factors_from(cands);
      } else {
        den_ = PolyY(std::move(scaled_den));
      }
    }
  }
}

RatFunc2 RatFunc2::normalized() const {
  RatFunc2 r = *this;
  r.normalize();
  return r;
}

RatFunc2 RatFunc2::with_factored_den(const std::vector<LinFactor>& candidates) const {
  RatFunc2 r = *this;
  r.den_.adopt_factors_from(candidates);
  return r;
}

namespace {

struct CommonDen {
  PolyY lcm;
  BiPoly cof_a;  // lcm / den_a
  BiPoly cof_b;
};

CommonDen common_den(const PolyY& a, const PolyY& b) {
  if (a.has_factors() && b.has_factors()) {
    PolyY l = PolyY::lcm(a, b);
    return {l, l.divide_exact(a).poly(), l.divide_exact(b).poly()};
  }
  return {PolyY::mul(a, b), b.poly(), a.poly()};
}

}  // namespace

RatFunc2 operator+(const RatFunc2& a, const RatFunc2& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_is_one() && b.den_is_one()) return RatFunc2(a.num() + b.num());
  CommonDen cd = common_den(a.den(), b.den());
  return RatFunc2(a.num() * cd.cof_a + b.num() * cd.cof_b, std::move(cd.lcm));
}

RatFunc2 operator-(const RatFunc2& a, const RatFunc2& b) { return a + (-b); }

RatFunc2 RatFunc2::operator-() const {
  RatFunc2 r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RatFunc2 operator*(const RatFunc2& a, const RatFunc2& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc2();
  return RatFunc2(a.num() * b.num(), PolyY::mul(a.den(), b.den()));
}

RatFunc2 RatFunc2::scaled(const BigRational& c) const {
  if (c == 0) return RatFunc2();
  RatFunc2 r;
  r.num_ = num_.scaled(c);
  r.den_ = den_;
  return r;
}

RatFunc2 RatFunc2::divided_by_linear(const BigInt& a, const BigInt& b) const {
  if (a == 0) {
    if (b == 0) throw InternalInconsistency("divide by zero linear factor");
    return scaled(BigRational(1) / BigRational(b));
  }
  if (is_zero()) return RatFunc2();
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (a < 0) g = -g;
  LinFactor f{a / g, b / g, 1};
  RatFunc2 r;
  r.num_ = num_.scaled(BigRational(1) / BigRational(g));
  r.den_ = PolyY::mul(den_, PolyY::from_factors({f}));
  r.normalize();
  return r;
}

RatFunc2 rf_arith(const RatFunc2& a, const RatFunc2& b, RfOp op) {
  switch (op) {
    case RfOp::add: return a + b;
    case RfOp::sub: return a - b;
    case RfOp::mul: return a * b;
    case RfOp::scalar_mul:
      if (!b.num().is_constant() || !b.den_is_one())
        throw DomainError("scalar_mul: second operand is not a scalar");
      return a.scaled(b.num().constant_value());
  }
  throw DomainError("rf_arith: bad op");
}

RatFunc2 rf_add_many(std::vector<RatFunc2> terms) {
  std::erase_if(terms, [](const RatFunc2& t) { return t.is_zero(); });
  if (terms.empty()) return RatFunc2();
  if (terms.size() == 1) return terms[0];
  PolyY lcm = terms[0].den();
  bool all_fact = lcm.has_factors();
  for (size_t i = 1; i < terms.size() && all_fact; ++i) all_fact &= terms[i].den().has_factors();
  if (!all_fact) {
    RatFunc2 acc = terms[0];
    for (size_t i = 1; i < terms.size(); ++i) acc = acc + terms[i];
    return acc;
  }
  for (size_t i = 1; i < terms.size(); ++i) lcm = PolyY::lcm(lcm, terms[i].den());
  BiPoly num;
  for (auto& t : terms) {
    BiPoly cof = lcm.divide_exact(t.den()).poly();
    num = num + t.num() * cof;
  }
  RatFunc2 r;
  r.num_ = std::move(num);
  r.den_ = std::move(lcm);
  r.normalize();
  return r;
}

RatFunc2 rf_partial(const RatFunc2& f, Var var, int order) {
  RatFunc2 g = f;
  for (int k = 0; k < order; ++k) {
    if (var == Var::X) {
      g = RatFunc2(g.num().derivative_x(), g.den());
    } else {
      BiPoly dnum = g.num().derivative_y() * g.den().poly() - g.num() * g.den().poly().derivative_y();
      g = RatFunc2(std::move(dnum), PolyY::mul(g.den(), g.den()));
    }
  }
  return g;
}

BigRational rf_eval_exact(const RatFunc2& f, const BigRational& x0, const BigRational& y0) {
  BigRational d = f.den().eval(y0);
  if (d == 0) throw PoleError("denominator vanishes at the evaluation point");
  return f.num().eval(x0, y0) / d;
}

namespace {

template <class S>
S eval_float_impl(const RatFunc2& f, const S& x0, const S& y0, long prec) {
  long wp = prec + BigFloat::kGuardBits;
  S x = [&] {
    if constexpr (std::is_same_v<S, BigFloat>) return x0.with_precision(wp);
    else return S(x0.re.with_precision(wp), x0.im.with_precision(wp));
  }();
  S y = [&] {
    if constexpr (std::is_same_v<S, BigFloat>) return y0.with_precision(wp);
    else return S(y0.re.with_precision(wp), y0.im.with_precision(wp));
  }();
  S dv = f.den().poly().eval(x, y);
  // Magnitude of the denominator's largest term at |y| sets the scale for
  // the near-pole test.
  BigFloat ay = [&] {
    if constexpr (std::is_same_v<S, BigFloat>) return y.abs();
    else return y.abs();
  }();
  BigFloat scale(0, wp);
  for (const auto& [e, c] : f.den().poly().terms()) {
    BigFloat m = BigFloat(c, wp).abs() * ay.pow_si(e.dy);
    if (m > scale) scale = m;
  }
  if (scale < BigFloat(1, wp)) scale = BigFloat(1, wp);
  BigFloat advv = [&] {
    if constexpr (std::is_same_v<S, BigFloat>) return dv.abs();
    else return dv.abs();
  }();
  if (advv <= scale.mul_2si(-prec))
    throw NearPoleError("denominator underflows the guard threshold");
  S nv = f.num().eval(x, y);
  S r = nv / dv;
  if constexpr (std::is_same_v<S, BigFloat>) return r.with_precision(prec);
  else return S(r.re.with_precision(prec), r.im.with_precision(prec));
}

}  // namespace

BigFloat rf_eval_float(const RatFunc2& f, const BigFloat& x0, const BigFloat& y0, long prec) {
  return eval_float_impl(f, x0, y0, prec);
}

BigComplex rf_eval_float(const RatFunc2& f, const BigComplex& x0, const BigComplex& y0, long prec) {
  return eval_float_impl(f, x0, y0, prec);
}

// ---------------------------------------------------------------------------
// Serialization

std::string rf_serialize(const RatFunc2& f) {
  std::ostringstream os;
  os << "NUM\n";
  for (const auto& [e, c] : f.num().terms())
    os << c.get_str() << ' ' << e.dx << ' ' << e.dy << '\n';
  os << "DEN\n";
  for (const auto& [e, c] : f.den().poly().terms()) {
    if (c.get_den() != 1)
      throw InternalInconsistency("serialize: denominator not integral");
    os << c.get_num().get_str() << ' ' << e.dy << '\n';
  }
  return os.str();
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

long parse_long(const std::string& s, int line, const char* what) {
  try {
    size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string("bad ") + what + " '" + s + "'", line);
  }
}

}  // namespace

RatFunc2 rf_parse_body(const std::string& text, size_t pos, int line0) {
  std::istringstream is(text.substr(pos));
  std::string line;
  int lineno = line0 - 1;
  int state = 0;  // 0 expect NUM, 1 in NUM, 2 in DEN
  BiPoly num, den;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (state == 0) {
      if (toks.size() != 1 || toks[0] != "NUM") throw ParseError("expected NUM section", lineno);
      state = 1;
      continue;
    }
    if (toks.size() == 1 && toks[0] == "DEN") {
      if (state != 1) throw ParseError("unexpected DEN", lineno);
      state = 2;
      continue;
    }
    if (state == 1) {
      if (toks.size() != 3) throw ParseError("numerator term needs 3 fields", lineno);
      BigRational c;
      try {
        c = parse_rational(toks[0]);
      } catch (const std::exception& e) {
        throw ParseError(e.what(), lineno);
      }
      num.add_term(c, static_cast<int>(parse_long(toks[1], lineno, "degX")),
                   static_cast<int>(parse_long(toks[2], lineno, "degY")));
    } else if (state == 2) {
      if (toks.size() != 2) throw ParseError("denominator term needs 2 fields", lineno);
      BigInt c;
      if (mpz_set_str(c.get_mpz_t(), toks[0].c_str(), 10) != 0)
        throw ParseError("bad integer coefficient '" + toks[0] + "'", lineno);
      den.add_term(BigRational(c), 0, static_cast<int>(parse_long(toks[1], lineno, "degY")));
    } else {
      throw ParseError("content before NUM section", lineno);
    }
  }
  if (state != 2) throw ParseError("missing DEN section", lineno + 1);
  if (den.is_zero()) throw ParseError("zero denominator polynomial", lineno);
  if (den.deg_x() != 0) throw ParseError("denominator contains X", lineno);
  return RatFunc2(std::move(num), PolyY(std::move(den)));
}

RatFunc2 rf_parse(const std::string& text) { return rf_parse_body(text, 0, 1); }

std::string rf_pretty(const RatFunc2& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  auto poly_str = [](const BiPoly& p) {
    std::ostringstream ps;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
      BigRational a = c;
      if (first) {
        if (a < 0) {
          ps << "-";
          a = -a;
        }
      } else {
        ps << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
      }
      first = false;
      bool has_var = e.dx > 0 || e.dy > 0;
      if (a != 1 || !has_var) {
        ps << a.get_str();
        if (has_var) ps << "*";
      }
      if (e.dx > 0) {
        ps << "X";
        if (e.dx > 1) ps << "^" << e.dx;
        if (e.dy > 0) ps << "*";
      }
      if (e.dy > 0) {
        ps << "Y";
        if (e.dy > 1) ps << "^" << e.dy;
      }
    }
    return ps.str();
  };
  if (f.den_is_one()) return poly_str(f.num());
  os << "(" << poly_str(f.num()) << ") / ";
  if (f.den().has_factors() && !f.den().factors().empty()) {
    const auto& fs = f.den().factors();
    os << "(";
    for (size_t i = 0; i < fs.size(); ++i) {
      if (i) os << "*";
      os << "(" << fs[i].a.get_str() << "*Y";
      if (fs[i].b > 0) os << " + " << fs[i].b.get_str();
      else if (fs[i].b < 0) os << " - " << BigInt(-fs[i].b).get_str();
      os << ")";
      if (fs[i].mult > 1) os << "^" << fs[i].mult;
    }
    os << ")";
  } else {
    os << "(" << poly_str(f.den().poly()) << ")";
  }
  return os.str();
}

}  // namespace gkw
