#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "seesaw/qfield.hpp"

using namespace seesaw;
using oracle::hilbert_brute;


TEST_CASE("norm, trace and conjugation") {
  CHECK(QuadElem(1, 0, -7).norm() == 1);
  CHECK(QuadElem(Rational(1, 2), Rational(1, 2), -7).norm() == 2);
  CHECK(QuadElem(3, 0, -7).norm() == 9);
  QuadElem x(Rational(3, 5), Rational(-2, 7), -7), y(Rational(1, 2), Rational(5, 2), -7);
  CHECK((x * y).norm() == x.norm() * y.norm());
  CHECK(x.conj().conj() == x);
  CHECK(x.conj() != x);
  CHECK(QuadElem(Rational(4, 3), 0, -7).conj() == QuadElem(Rational(4, 3), 0, -7));
  CHECK(x * x.inverse() == QuadElem(1, 0, -7));
  CHECK(QuadElem(Rational(1, 2), Rational(1, 2), -7).is_integral());
  CHECK_FALSE(QuadElem(Rational(1, 2), 0, -7).is_integral());
  CHECK(x.pow(3) == x * x * x);
  CHECK(x.pow(-2) * x.pow(2) == QuadElem(1, 0, -7));
}

TEST_CASE("ideals compare up to units") {
  QuadElem g(Rational(1, 2), Rational(1, 2), -7);
  CHECK(IdealE(g) == IdealE(-g));
  CHECK_FALSE(IdealE(g) == IdealE(g.conj()));
  CHECK(IdealE(g).norm() == 2);
}

TEST_CASE("legendre symbol") {
  CHECK(legendre(2, 7) == 1);
  CHECK(legendre(3, 7) == -1);
  CHECK(legendre(7, 7) == 0);
  CHECK_THROWS_AS(legendre(3, 2), Error);
  CHECK_THROWS_AS(legendre(3, 9), Error);
}

TEST_CASE("hilbert symbol examples") {
  for (long p : {0L, 2L, 3L, 5L, 7L, 11L}) {
    Place v{p};
    CHECK(hilbert_symbol(Rational(5, 3), Rational(-5, 3), v) == 1);
  }
  CHECK(hilbert_symbol(-7, -1, Place::infinite()) == -1);
  CHECK(hilbert_symbol(-7, -1, Place::finite(7)) == -1);
  CHECK_THROWS_AS(hilbert_symbol(0, 3, Place::finite(3)), Error);
}

TEST_CASE("ramification sets") {
  CHECK(ramification_set(-7, -1) == std::vector<Place>{Place::finite(7), Place::infinite()});
  CHECK(ramification_set(-7, 1).empty());
  CHECK(ramification_set(-1, -1) == std::vector<Place>{Place::finite(2), Place::infinite()});
  CHECK(ramification_set(-7, Rational(1, 7)).empty());
  CHECK(ramification_set(-7, Rational(-1, 7)) == std::vector<Place>{Place::finite(7), Place::infinite()});
}

TEST_CASE("hilbert symbol agrees with brute-force solvability") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(-60, 60);
  int checked = 0;
  for (int t = 0; t < 120; ++t) {
    int a = d(rng), b = d(rng);
    if (!a || !b) continue;
    for (long p : {2L, 3L, 5L, 7L}) {
      INFO("a=" << a << " b=" << b << " p=" << p);
      CHECK(hilbert_symbol(a, b, Place::finite(p)) == hilbert_brute(a, b, p));
      ++checked;
    }
  }
  CHECK(checked > 300);
  CHECK(hilbert_brute(-7, -1, 7) == -1);
  CHECK(hilbert_brute(-1, -1, 2) == -1);
}

TEST_CASE("product formula and bimultiplicativity") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-5000, 5000);
  auto rnd = [&] {
    long n = 0, m = 0;
    while (!n) n = d(rng);
    while (m <= 0) m = d(rng) % 300;
    return Rational(n, m);
  };
  for (int t = 0; t < 1000; ++t) {
    Rational a = rnd(), b = rnd();
    a.canonicalize();
    b.canonicalize();
    int prod = 1;
    for (const Place& v : hilbert_support(a, b)) prod *= hilbert_symbol(a, b, v);
    CHECK(prod == 1);
    CHECK(ramification_set(a, b).size() % 2 == 0);
  }
  for (int t = 0; t < 300; ++t) {
    Rational a = rnd(), b1 = rnd(), b2 = rnd();
    for (long p : {0L, 2L, 3L, 5L, 7L, 13L}) {
      Place v{p};
      CHECK(hilbert_symbol(a, b1 * b2, v) == hilbert_symbol(a, b1, v) * hilbert_symbol(a, b2, v));
      CHECK(hilbert_symbol(a, -a, v) == 1);
    }
  }
}
