#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <utility>

namespace excalc {

using Int = boost::multiprecision::cpp_int;

/// Exact rational scalar, kept in lowest terms with positive denominator.
using Rat = boost::multiprecision::cpp_rational;

inline Rat ratio(long num, long den = 1) { return Rat(Int(num), Int(den)); }

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

/// Gaussian rational a + b*i: the exact coefficient field for complex-mode
/// forms. Real-mode coefficients are the b == 0 subfield.
struct GaussRat {
  Rat re{0};
  Rat im{0};

  GaussRat() = default;
  GaussRat(const Rat& r) : re(r) {}
  GaussRat(Rat&& r) : re(std::move(r)) {}
  GaussRat(int n) : re(n) {}
  GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  static GaussRat unit_i() { return GaussRat(Rat(0), Rat(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  GaussRat conj() const { return GaussRat(re, -im); }

  std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }

  GaussRat& operator+=(const GaussRat& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRat& operator-=(const GaussRat& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussRat operator/(const GaussRat& a, const Rat& d) { return {a.re / d, a.im / d}; }
  friend bool operator==(const GaussRat&, const GaussRat&) = default;
};

}  // namespace excalc
