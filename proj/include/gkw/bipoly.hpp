#ifndef GKW_BIPOLY_HPP
#define GKW_BIPOLY_HPP

#include <gkw/bigcomplex.hpp>
#include <gkw/bigfloat.hpp>
#include <gkw/rational.hpp>

#include <map>
#include <optional>
#include <vector>

namespace gkw {

struct Exp2 {
  int dx = 0;
  int dy = 0;
  friend bool operator==(const Exp2&, const Exp2&) = default;
};

// Descending (degX, degY) lexicographic; fixes serialization order.
struct Exp2Desc {
  bool operator()(const Exp2& a, const Exp2& b) const {
    if (a.dx != b.dx) return a.dx > b.dx;
    return a.dy > b.dy;
  }
};

// Sparse bivariate polynomial over Q in canonical form: no zero
// coefficients stored, so two polynomials are equal iff their maps are.
class BiPoly {
 public:
  using TermMap = std::map<Exp2, BigRational, Exp2Desc>;

  BiPoly() = default;
  explicit BiPoly(const BigRational& c) {
    if (c != 0) terms_[{0, 0}] = c;
  }
  static BiPoly monomial(const BigRational& c, int dx, int dy) {
    BiPoly p;
    if (c != 0) p.terms_[{dx, dy}] = c;
    return p;
  }
  static BiPoly from_terms(const std::vector<std::tuple<BigRational, int, int>>& ts);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exp2{0, 0});
  }
  BigRational constant_value() const;
  int deg_x() const;
  int deg_y() const;
  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  void add_term(const BigRational& c, int dx, int dy);

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  BiPoly operator-() const;
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

  BiPoly scaled(const BigRational& c) const;
  BiPoly derivative_x() const;
  BiPoly derivative_y() const;

  BigRational eval(const BigRational& x, const BigRational& y) const;
  BigFloat eval(const BigFloat& x, const BigFloat& y) const;
  BigComplex eval(const BigComplex& x, const BigComplex& y) const;

  // Substitute a rational value for Y only; result is a polynomial in X.
  BiPoly eval_y(const BigRational& y) const;

  // gcd of numerators / lcm of denominators of all coefficients, with the
  // sign of the leading term; zero polynomial has content 0.
  BigRational content() const;

 private:
  TermMap terms_;
};

// C(X + shift, k) = prod_{i=0}^{k-1} (X + shift - i) / k! as a polynomial
// in X of degree k. poly_binom(shift, 0) = 1.
BiPoly poly_binom(long shift, long k);

// Linear factor a*Y + b with integer coprime (a, b), a > 0 unless the
// factor is Y itself (a=1, b=0).
struct LinFactor {
  BigInt a;
  BigInt b;
  int mult = 1;
  friend bool operator==(const LinFactor&, const LinFactor&) = default;
};

// Polynomial in Y only (den side of RatFunc2). Keeps the expanded form and,
// when known, a factorization into integer-linear factors whose expansion
// reproduces the expanded form exactly.
class PolyY {
 public:
  PolyY() : poly_(BigRational(1)) { factors_.emplace(); }  // the constant 1
  explicit PolyY(BiPoly expanded);                          // no factored view
  static PolyY one() { return PolyY(); }
  static PolyY from_factors(std::vector<LinFactor> fs);

  const BiPoly& poly() const { return poly_; }
  bool is_one() const;
  bool has_factors() const { return factors_.has_value(); }
  const std::vector<LinFactor>& factors() const { return *factors_; }

  int degree() const { return poly_.deg_y(); }
  bool is_zero() const { return poly_.is_zero(); }

  // Least common multiple / product on the factored view when both sides
  // have one; falls back to polynomial arithmetic otherwise.
  static PolyY lcm(const PolyY& a, const PolyY& b);
  static PolyY mul(const PolyY& a, const PolyY& b);
  // this / g for g dividing this exactly (g from lcm bookkeeping).
  PolyY divide_exact(const PolyY& g) const;

  BigRational eval(const BigRational& y) const { return poly_.eval(BigRational(0), y); }

  // Attempt to recover a complete integer-linear factorization of an
  // expanded polynomial by trial division against a candidate factor list
  // (callers supply candidates they expect, e.g. the recurrence's solve
  // divisors). Returns false if the candidates do not fully factor it.
  bool adopt_factors_from(const std::vector<LinFactor>& candidates);

  friend bool operator==(const PolyY& a, const PolyY& b) { return a.poly_ == b.poly_; }

 private:
  BiPoly poly_;
  std::optional<std::vector<LinFactor>> factors_;
  void expand_from_factors();
};

// Quotient of p by (a*Y + b) in Q[X][Y]; requires exact divisibility
// (checked; throws InternalInconsistency otherwise).
BiPoly divide_linear_y(const BiPoly& p, const BigInt& a, const BigInt& b);
bool divisible_linear_y(const BiPoly& p, const BigInt& a, const BigInt& b);

}  // namespace gkw

#endif
