#pragma once

#include <string>
#include <vector>

#include "seesaw/errors.hpp"
#include "seesaw/numeric.hpp"

namespace seesaw {

// A place of Q: p == 0 encodes the real place.
struct Place {
  long p = 0;

  static Place infinite() { return {0}; }
  static Place finite(long prime) { return {prime}; }
  bool is_infinite() const { return p == 0; }
  std::string to_string() const { return p == 0 ? "inf" : std::to_string(p); }

  friend bool operator==(const Place&, const Place&) = default;
  // Finite places in increasing order, the real place last.
  friend bool operator<(const Place& x, const Place& y) {
    if (x.p == 0) return false;
    if (y.p == 0) return true;
    return x.p < y.p;
  }
};

// a + b*sqrt(u) with a, b rational and u a nonsquare integer.
class QuadElem {
 public:
  QuadElem() = default;
  QuadElem(Rational a, Rational b, long u);
  static QuadElem rational(const Rational& a, long u) { return {a, 0, u}; }
  static QuadElem sqrt_u(long u) { return {0, 1, u}; }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  long u() const { return u_; }

  QuadElem conj() const { return {a_, -b_, u_}; }
  Rational norm() const { return a_ * a_ - Rational(u_) * b_ * b_; }
  Rational trace() const { return 2 * a_; }
  QuadElem inverse() const;
  QuadElem pow(long n) const;

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }
  // Integral over Z: trace and norm are integers.
  bool is_integral() const;

  QuadElem& operator+=(const QuadElem& o);
  QuadElem& operator-=(const QuadElem& o);
  QuadElem& operator*=(const QuadElem& o);
  QuadElem& operator/=(const QuadElem& o);
  QuadElem operator-() const { return {-a_, -b_, u_}; }

  friend QuadElem operator+(QuadElem x, const QuadElem& y) { return x += y; }
  friend QuadElem operator-(QuadElem x, const QuadElem& y) { return x -= y; }
  friend QuadElem operator*(QuadElem x, const QuadElem& y) { return x *= y; }
  friend QuadElem operator/(QuadElem x, const QuadElem& y) { return x /= y; }
  friend bool operator==(const QuadElem& x, const QuadElem& y) {
    return x.u_ == y.u_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const QuadElem& x, const QuadElem& y) { return !(x == y); }

  std::string to_string() const;

  // Complex embedding with sqrt(u) = i*sqrt(|u|) for u < 0.
  template <class T>
  Complex<T> embed() const {
    using std::sqrt;
    T s = sqrt(T(u_ < 0 ? -u_ : u_));
    T a = from_rational<T>(a_);
    T b = from_rational<T>(b_) * s;
    if (u_ < 0) return {a, b};
    return {a + b, T(0)};
  }

 private:
  void check(const QuadElem& o) const;
  Rational a_ = 0, b_ = 0;
  long u_ = -1;
};

// Principal ideal of the ring of integers of a class-number-one field.
class IdealE {
 public:
  explicit IdealE(QuadElem generator);
  const QuadElem& generator() const { return gen_; }
  Rational norm() const { return abs(gen_.norm()); }
  friend bool operator==(const IdealE& x, const IdealE& y);

 private:
  QuadElem gen_;
};

bool is_prime(const Integer& n);
bool is_prime(long n);

// Exponent of p in a nonzero rational.
long valuation(const Rational& x, long p);
long valuation(const Integer& x, long p);

// Prime divisors of a nonzero integer, ascending. Uses trial division.
std::vector<long> prime_divisors(Integer n);

// Legendre symbol (a/p) for an odd prime p.
int legendre(const Integer& a, long p);

// Local Hilbert symbol (a,b)_v over Q.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& v);

// Places where (a,b)_v may be -1: the real place and primes dividing 2ab.
std::vector<Place> hilbert_support(const Rational& a, const Rational& b);

// {v : (a,b)_v = -1}, ascending with the real place last.
std::vector<Place> ramification_set(const Rational& a, const Rational& b);

std::string to_string(const std::vector<Place>& places);

}  // namespace seesaw
