#pragma once

#include <string>

#include "weitz/rational.hpp"

namespace weitz {

/// Element of Q(i): the scalar field for every matrix realization. The
/// imaginary unit enters only through spinor generators and the Pfaffian
/// prefactor; most entries stay real.
struct Gaussian {
  Rational re;
  Rational im;

  Gaussian() : re(0), im(0) {}
  Gaussian(const Rational& r) : re(r), im(0) {}
  Gaussian(long r) : re(r), im(0) {}
  Gaussian(const Rational& r, const Rational& i) : re(r), im(i) {}

  static Gaussian i() { return Gaussian(Rational(0), Rational(1)); }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }

  Gaussian conj() const { return Gaussian(re, Rational(-im)); }

  /// |z|^2, always a nonnegative rational.
  Rational norm2() const {
    Rational r = re * re;
    r += im * im;
    return r;
  }

  Gaussian& operator+=(const Gaussian& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Gaussian& operator-=(const Gaussian& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Gaussian& operator*=(const Gaussian& o) {
    Rational nre = re * o.re;
    nre -= im * o.im;
    Rational nim = re * o.im;
    nim += im * o.re;
    re = nre;
    im = nim;
    return *this;
  }
  Gaussian& operator/=(const Gaussian& o) {
    Rational n2 = o.norm2();
    if (sgn(n2) == 0) fail(ErrorKind::ParseError, "division by zero Gaussian rational");
    Gaussian inv(Rational(o.re / n2), Rational(-o.im / n2));
    return (*this) *= inv;
  }

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  friend Gaussian operator-(const Gaussian& a) {
    return Gaussian(Rational(-a.re), Rational(-a.im));
  }
  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }
};

/// Renders "a/b", "c/d*i", "a/b+c/d*i" or "a/b-c/d*i"; "0" for zero.
std::string to_string(const Gaussian& z);

/// Parses the format produced by to_string.
Gaussian parse_gaussian(const std::string& text);

// Conjugation hooks so matrix code can be generic over Rational and Gaussian.
inline Rational conj_value(const Rational& r) { return r; }
inline Gaussian conj_value(const Gaussian& z) { return z.conj(); }
inline bool is_zero_value(const Rational& r) { return sgn(r) == 0; }
inline bool is_zero_value(const Gaussian& z) { return z.is_zero(); }

}  // namespace weitz
