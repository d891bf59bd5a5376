#include <random>

#include "doctest.h"
#include "seesaw/hecke.hpp"

using namespace seesaw;

namespace {
QuadElem omega() { return {Rational(1, 2), Rational(1, 2), -7}; }  // (1+sqrt(-7))/2
QuadElem E(long x, long y) { return QuadElem(x, 0, -7) + QuadElem(y, 0, -7) * omega(); }
}  // namespace

TEST_CASE("canonical character data") {
  CHECK(conductor(canonical_char(1)) == QuadElem::sqrt_u(-7));
  CHECK(conductor(canonical_char(2)) == QuadElem::rational(1, -7));
  CHECK(canonical_char(1).infinity_type == std::pair<long, long>{1, 0});
  CHECK(canonical_char(3).infinity_type == std::pair<long, long>{3, 0});
}

TEST_CASE("epsilon and ideal values") {
  // Squares mod 7 are {1,2,4}.
  CHECK(epsilon7(QuadElem(3, 0, -7)) == -1);
  CHECK(epsilon7(QuadElem(-1, 0, -7)) == -1);
  CHECK(epsilon7(omega()) == 1);
  auto chi = canonical_char(1);
  CHECK(eval_exact(chi, QuadElem(3, 0, -7)) == QuadElem(-3, 0, -7));
  CHECK(eval_exact(chi, omega()) == omega());
  CHECK_THROWS_AS(eval_exact(chi, QuadElem::sqrt_u(-7)), Error);
  auto chi2 = canonical_char(2);
  CHECK(eval_exact(chi2, E(3, 1)) == E(3, 1).pow(2));
  CHECK(eval_exact(chi2, QuadElem::sqrt_u(-7)) == QuadElem(-7, 0, -7));
  auto v = eval_ideal<double>(chi, IdealE(omega()));
  CHECK(v.re == doctest::Approx(0.5));
  CHECK(v.im == doctest::Approx(std::sqrt(7.0) / 2));
  auto w = eval_ideal<double>(canonical_char(1, true), IdealE(omega()));
  CHECK(w.abs() == doctest::Approx(1.0));
}

TEST_CASE("multiplicativity, unit invariance and restriction to Q") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(-30, 30);
  for (long n : {1L, 2L, 3L, 4L}) {
    auto chi = canonical_char(n);
    int done = 0;
    while (done < 200) {
      QuadElem a = E(d(rng), d(rng)), b = E(d(rng), d(rng));
      if (a.is_zero() || b.is_zero()) continue;
      if (valuation(a.norm(), 7) || valuation(b.norm(), 7)) continue;
      CHECK(eval_exact(chi, a * b) == eval_exact(chi, a) * eval_exact(chi, b));
      CHECK(eval_exact(chi, -a) == eval_exact(chi, a));
      ++done;
    }
    for (long m = 1; m <= 100; ++m) {
      if (m % 7 == 0) continue;
      // chi'((m)) = eps(m)^n m^n and eps agrees with the Legendre symbol mod 7.
      int e = legendre(m, 7);
      QuadElem expect = QuadElem(Rational(m), 0, -7).pow(n);
      if (n % 2 && e == -1) expect = -expect;
      CHECK(eval_exact(chi, QuadElem(m, 0, -7)) == expect);
    }
  }
}

TEST_CASE("twisted character") {
  TwistedCharSpec t{canonical_char(2)};
  CHECK(eval_twisted(t, QuadElem(5, 0, -7)) == QuadElem(1, 0, -7));
  CHECK(eval_twisted(t, QuadElem::sqrt_u(-7)) == QuadElem(1, 0, -7));
  TwistedCharSpec t1{canonical_char(1)};
  CHECK(eval_twisted(t1, QuadElem::sqrt_u(-7)) == QuadElem(-1, 0, -7));
  CHECK(eval_twisted(t, omega()).norm() == 1);
}

TEST_CASE("conductor of the automorphic induction") {
  CHECK(local_type(-7, 2) == LocalType::Split);
  CHECK(local_type(-7, 3) == LocalType::Unramified);
  CHECK(local_type(-7, 7) == LocalType::Ramified);
  CHECK(local_type(-7, 11) == LocalType::Split);
  CHECK(conductor_pi(LocalType::Ramified, 1, 0, 0) == 2);
  CHECK(conductor_pi(LocalType::Ramified, 0, 0, 0) == 1);
  CHECK(conductor_pi(LocalType::Split, 0, 0, 0) == 0);
  CHECK(conductor_pi(LocalType::Unramified, 1, 0, 0) == 2);
  CHECK(newform_level(canonical_char(1)) == 49);
  CHECK(newform_level(canonical_char(2)) == 7);
  CHECK(newform_level(canonical_char(5)) == 49);
}
