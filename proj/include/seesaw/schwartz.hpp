#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "seesaw/errors.hpp"
#include "seesaw/numeric.hpp"
#include "seesaw/qfield.hpp"

namespace seesaw {

// Terminating 1F1(a, b, t) with a = -l, b = |k| + 1.
struct KummerPoly {
  long a = 0;
  long b = 1;
  std::vector<Rational> coeffs;  // coeffs[j] = (a)_j / ((b)_j j!)

  static KummerPoly make(long k, long l);
  long degree() const { return static_cast<long>(coeffs.size()) - 1; }
  Rational eval(const Rational& t) const;
  template <class T>
  T eval(const T& t) const {
    T r(0);
    for (std::size_t j = coeffs.size(); j-- > 0;) r = r * t + from_rational<T>(coeffs[j]);
    return r;
  }
  // Coefficients of f' (exact).
  std::vector<Rational> derivative() const;
};

// phi'_{k,l}(z) = F(4 pi z zbar) zbar^k e^{-2 pi z zbar}, with z^{-k} for k < 0.
struct ArchSchwartz {
  long k = 0;
  long l = 0;
  KummerPoly poly;

  ArchSchwartz(long k_, long l_) : k(k_), l(l_), poly(KummerPoly::make(k_, l_)) {}

  template <class T>
  Complex<T> operator()(const Complex<T>& z) const {
    using std::exp;
    T n = z.norm();
    T f = poly.eval(T(4) * pi_v<T>() * n) * exp(T(-2) * pi_v<T>() * n);
    Complex<T> mono = cpow(k >= 0 ? z.conj() : z, k >= 0 ? k : -k);
    return mono * f;
  }
};

template <class T>
Complex<T> eval_phi(long k, long l, const Complex<T>& z) {
  require(l >= 0, "eval_phi: l must be nonnegative");
  return ArchSchwartz(k, l)(z);
}

// t f'' + (b - t) f' - a f == 0 coefficientwise.
bool verify_ode(long k, long l);

// Polynomial in (w, wbar) over Q times e^{-w wbar}, where w = sqrt(2 pi) z.
// In these coordinates 2 pi z zbar = w wbar and (1/2pi) d_z d_zbar = d_w d_wbar,
// so every check below is exact over Q.
class GaussPoly {
 public:
  using Key = std::pair<int, int>;  // (power of w, power of wbar)

  GaussPoly() = default;
  static GaussPoly monomial(int i, int j, const Rational& c = 1);
  // Image of phi'_{k,l} up to the constant (2 pi)^{-|k|/2}.
  static GaussPoly phi(long k, long l);

  GaussPoly d_w() const;
  GaussPoly d_wbar() const;
  GaussPoly times_wwbar() const;
  GaussPoly& operator+=(const GaussPoly& o);
  GaussPoly operator*(const Rational& c) const;
  friend GaussPoly operator-(GaussPoly a, const GaussPoly& b) { return a += b * Rational(-1); }
  friend bool operator==(const GaussPoly& a, const GaussPoly& b) { return a.terms_ == b.terms_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, Rational>& terms() const { return terms_; }

 private:
  void add(const Key& k, const Rational& c);
  std::map<Key, Rational> terms_;
};

// (X+ - X-) phi = i (2 pi z zbar phi - (1/2pi) d_z d_zbar phi); returns lambda
// with (X+ - X-) phi'_{k,l} = i lambda phi'_{k,l}, or throws VerificationFailed
// if phi'_{k,l} is not an eigenvector.
Rational rotation_eigenvalue(long k, long l);
bool rotation_eigen_check(long k, long l);

// Closed form <phi'_{k,l}, phi'_{k,l}> with measure 2 dx dy:
// 2 pi / (4 pi)^{|k|+1} * l! |k|!^2 / (l + |k|)!.
Rational phi_inner_product_rational_part(long k, long l);
template <class T>
T phi_inner_product(long k, long l) {
  using std::pow;
  long kk = k < 0 ? -k : k;
  T p = pi_v<T>();
  return T(2) * p / pow(T(4) * p, kk + 1) * from_rational<T>(phi_inner_product_rational_part(k, l));
}

// Trapezoid rule on [-L, L]^2 with step h for <phi'_{k,l1}, phi'_{k,l2}>.
double phi_inner_product_quadrature(long k, long l1, long l2, double h = 0.05, double L = 3.5);

// Exact symbolic Maass-Shimura check. Works in Q(i)[T, y^{+-1}] with
// T = 4 pi N y and N = v vbar: applies (d/dz + w/(z - zbar)) for
// w = kappa, kappa + 2, ... to e^{2 pi i N z}, then compares with
// c * y^{-l} 1F1(-l, kappa, T) e^{2 pi i N z}. Each step carries 1/(2 pi i).
struct MaassShimuraSymbolic {
  long kappa = 1;
  long l = 0;
  QuadElem constant;   // c in Q(i), the (2 pi i)^{-l} factor kept apart
  bool matches = false;
};
MaassShimuraSymbolic maass_shimura_symbolic(long k, long l);
// Expected constant (|k|+1)_l / (2i)^l in Q(i).
QuadElem maass_shimura_expected(long k, long l);
bool maass_shimura_phi_relation(long k, long l);

// Finite-difference oracle at random (v, x, y): for each step m < l checks
// (d/dz + (kappa+2m)/(z - zbar)) f_m = (kappa+m)/(2i) f_{m+1} with
// f_m = y^{-m} 1F1(-m, kappa, 4 pi N y) e^{2 pi i N z}, and that
// y^{-m+1/2} e^{2 pi i x N} phi'_{k,m}(v sqrt y) = v-monomial * y^{kappa/2} f_m.
// Returns the largest relative residual.
double maass_shimura_fd_residual(long k, long l, std::uint64_t seed, int samples);

}  // namespace seesaw
