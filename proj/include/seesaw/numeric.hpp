#pragma once

#include <gmpxx.h>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <cmath>
#include <string>

namespace seesaw {

using Integer = mpz_class;
using Rational = mpq_class;

// n/d in canonical form; mpq_class(n, d) does not reduce.
inline Rational make_rational(const Integer& n, const Integer& d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

// Runtime-precision MPFR float. The working precision is process-wide.
using Mp = boost::multiprecision::mpfr_float;

inline constexpr unsigned kDefaultPrecisionBits = 128;

// Sets the default MPFR precision for newly created Mp values.
void set_precision_bits(unsigned bits);
unsigned precision_bits();

template <class T>
T from_rational(const Rational& q);

template <>
inline double from_rational<double>(const Rational& q) {
  return q.get_d();
}

template <>
inline Mp from_rational<Mp>(const Rational& q) {
  Mp r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

template <class T>
T from_integer(const Integer& z) {
  return from_rational<T>(Rational(z));
}

template <class T>
T pi_v() {
  if constexpr (std::is_same_v<T, double>) {
    return M_PI;
  } else {
    return boost::math::constants::pi<T>();
  }
}

inline double to_double(double x) { return x; }
inline double to_double(const Mp& x) { return x.convert_to<double>(); }

// Minimal complex type usable with both double and Mp; std::complex is not
// specified for non-fundamental scalars.
template <class T>
struct Complex {
  T re{0};
  T im{0};

  Complex() = default;
  Complex(T r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
  Complex(T r, T i) : re(std::move(r)), im(std::move(i)) {}

  static Complex polar(const T& rho, const T& theta) {
    using std::cos;
    using std::sin;
    return {rho * cos(theta), rho * sin(theta)};
  }

  Complex conj() const { return {re, -im}; }
  T norm() const { return re * re + im * im; }
  T abs() const {
    using std::sqrt;
    return sqrt(norm());
  }

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    T r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  Complex& operator*=(const T& s) {
    re *= s;
    im *= s;
    return *this;
  }
  Complex& operator/=(const Complex& o) {
    T d = o.norm();
    T r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = std::move(r);
    return *this;
  }
  Complex& operator/=(const T& s) {
    re /= s;
    im /= s;
    return *this;
  }
  Complex operator-() const { return {-re, -im}; }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator*(Complex a, const T& s) { return a *= s; }
  friend Complex operator*(const T& s, Complex a) { return a *= s; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator/(Complex a, const T& s) { return a /= s; }
};

template <class T>
Complex<T> cexp(const Complex<T>& z) {
  using std::exp;
  return Complex<T>::polar(exp(z.re), z.im);
}

// Principal square root (branch cut along the negative real axis).
template <class T>
Complex<T> csqrt(const Complex<T>& z) {
  using std::abs;
  using std::sqrt;
  T r = z.abs();
  if (r == 0) return {};
  T a = sqrt((r + abs(z.re)) / 2);
  if (z.re >= 0) return {a, z.im / (2 * a)};
  T b = z.im >= 0 ? a : T(-a);
  return {abs(z.im) / (2 * a), b};
}

template <class T>
Complex<T> cpow(Complex<T> z, long n) {
  Complex<T> r(T(1));
  if (n < 0) {
    z = Complex<T>(T(1)) / z;
    n = -n;
  }
  while (n) {
    if (n & 1) r *= z;
    z *= z;
    n >>= 1;
  }
  return r;
}

template <class T>
Complex<T> I_v() {
  return {T(0), T(1)};
}

// Rising factorial (a)_n as an exact rational.
Rational pochhammer(const Rational& a, unsigned n);
Integer factorial(unsigned n);

std::string format_real(double x);
std::string format_real(const Mp& x);

}  // namespace seesaw
