#ifndef GKW_BIGCOMPLEX_HPP
#define GKW_BIGCOMPLEX_HPP

#include <gkw/bigfloat.hpp>

namespace gkw {

// Rectangular complex value over BigFloat.
struct BigComplex {
  BigFloat re;
  BigFloat im;

  explicit BigComplex(long prec = BigFloat::kDefaultPrec) : re(prec), im(prec) {}
  BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
  BigComplex(const BigRational& q, long prec) : re(q, prec), im(prec) {}
  BigComplex(long v, long prec) : re(v, prec), im(prec) {}

  long precision() const { return std::min(re.precision(), im.precision()); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }

  friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    BigFloat d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  BigComplex operator-() const { return {-re, -im}; }
  BigComplex& operator+=(const BigComplex& o) { return *this = *this + o; }
  BigComplex& operator*=(const BigComplex& o) { return *this = *this * o; }
  friend bool operator==(const BigComplex& a, const BigComplex& b) {
    return a.re == b.re && a.im == b.im;
  }

  BigFloat abs() const {
    BigFloat r(precision());
    mpfr_hypot(r.raw(), re.raw(), im.raw(), MPFR_RNDN);
    return r;
  }

  // exp(z) = e^re (cos im + i sin im)
  BigComplex exp() const {
    BigFloat m = re.exp();
    return {m * im.cos(), m * im.sin()};
  }
};

// Principal branch of 2^z = exp(z log 2).
inline BigComplex pow2_complex(const BigComplex& z, long prec) {
  BigFloat l2 = BigFloat::log2(prec);
  BigComplex w(z.re.with_precision(prec) * l2, z.im.with_precision(prec) * l2);
  return w.exp();
}

}  // namespace gkw

#endif
