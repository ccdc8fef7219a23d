#ifndef GKW_RATFUNC_HPP
#define GKW_RATFUNC_HPP

#include <gkw/bipoly.hpp>

#include <iosfwd>
#include <string>

namespace gkw {

// Bivariate rational function num/den with den restricted to Q[Y].
//
// Canonical form: den has integer coefficients, content 1 and positive
// leading coefficient; the numerator carries all rational content; no
// nonconstant polynomial in Y divides both num (coefficient-wise over
// Q[X]) and den. Values are immutable once constructed.
class RatFunc2 {
 public:
  RatFunc2() : num_(), den_(PolyY::one()) {}  // zero
  explicit RatFunc2(const BigRational& c) : num_(c), den_(PolyY::one()) {}
  explicit RatFunc2(BiPoly num) : num_(std::move(num)), den_(PolyY::one()) {}
  RatFunc2(BiPoly num, PolyY den, bool normalize = true);

  static RatFunc2 zero() { return RatFunc2(); }
  static RatFunc2 one() { return RatFunc2(BigRational(1)); }

  const BiPoly& num() const { return num_; }
  const PolyY& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool den_is_one() const { return den_.is_one(); }

  friend RatFunc2 operator+(const RatFunc2& a, const RatFunc2& b);
  friend RatFunc2 operator-(const RatFunc2& a, const RatFunc2& b);
  friend RatFunc2 operator*(const RatFunc2& a, const RatFunc2& b);
  RatFunc2 operator-() const;
  RatFunc2 scaled(const BigRational& c) const;
  friend bool operator==(const RatFunc2& a, const RatFunc2& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  // Division by a linear polynomial a*Y + b (the recurrence's solve step).
  RatFunc2 divided_by_linear(const BigInt& a, const BigInt& b) const;

  // Re-runs canonicalization; used by the idempotence property test.
  RatFunc2 normalized() const;

  // Copy with the denominator's factored view recovered by trial division
  // against candidate factors (no-op if they do not fully factor it).
  RatFunc2 with_factored_den(const std::vector<LinFactor>& candidates) const;

 private:
  BiPoly num_;
  PolyY den_;
  void normalize();
  friend RatFunc2 rf_add_many(std::vector<RatFunc2> terms);
};

enum class RfOp { add, sub, mul, scalar_mul };

// Spec-surface arithmetic entry point; scalar_mul reads the scalar from
// b's constant value.
RatFunc2 rf_arith(const RatFunc2& a, const RatFunc2& b, RfOp op);

// Sums many terms over one common denominator with a single normalization
// pass; exact same result as folding operator+, much cheaper.
RatFunc2 rf_add_many(std::vector<RatFunc2> terms);

enum class Var { X, Y };

RatFunc2 rf_partial(const RatFunc2& f, Var var, int order = 1);

// Exact evaluation; throws PoleError when den(y0) == 0.
BigRational rf_eval_exact(const RatFunc2& f, const BigRational& x0, const BigRational& y0);

// Guarded float evaluation at prec bits (plus kGuardBits internally);
// throws NearPoleError when |den(y0)| underflows the guard threshold
// 2^(-prec) relative to the largest denominator term.
BigFloat rf_eval_float(const RatFunc2& f, const BigFloat& x0, const BigFloat& y0, long prec);
BigComplex rf_eval_float(const RatFunc2& f, const BigComplex& x0, const BigComplex& y0, long prec);

// Text form (NUM/DEN sections). rf_parse(rf_serialize(f)) == f.
std::string rf_serialize(const RatFunc2& f);
RatFunc2 rf_parse(const std::string& text);
// Parser used by the cache layer: consumes from `pos`, expects NUM section
// first; `line0` is the 1-based line number of text[pos] for errors.
RatFunc2 rf_parse_body(const std::string& text, size_t pos, int line0);

// Human-readable rendering ("(X*Y^2 + ...) / ((3*Y - 2)^2 * Y)").
std::string rf_pretty(const RatFunc2& f);

}  // namespace gkw

#endif
