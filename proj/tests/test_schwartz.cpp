#include <cmath>

#include "doctest.h"
#include "seesaw/schwartz.hpp"

using namespace seesaw;

TEST_CASE("Kummer polynomial structure") {
  auto p = KummerPoly::make(2, 1);
  REQUIRE(p.coeffs.size() == 2);
  CHECK(p.coeffs[0] == 1);
  CHECK(p.coeffs[1] == Rational(-1, 3));
  for (long k = -20; k <= 20; ++k)
    for (long l = 0; l <= 20; ++l) {
      auto q = KummerPoly::make(k, l);
      CHECK(q.degree() == l);
      CHECK(q.coeffs[0] == 1);
      CHECK(sgn(q.coeffs.back()) != 0);
    }
  CHECK_THROWS_AS(KummerPoly::make(1, -1), Error);
}

TEST_CASE("pointwise values") {
  Complex<double> one(1.0);
  CHECK(eval_phi(2, 0, one).re == doctest::Approx(std::exp(-2 * M_PI)));
  Complex<double> z(0.3, -0.2);
  double n = z.norm();
  auto want = cpow(z.conj(), 2) * ((1 - 4 * M_PI * n / 3) * std::exp(-2 * M_PI * n));
  auto got = eval_phi(2, 1, z);
  CHECK(got.re == doctest::Approx(want.re).epsilon(1e-14));
  CHECK(got.im == doctest::Approx(want.im).epsilon(1e-14));
  CHECK(eval_phi(0, 0, z).re == doctest::Approx(std::exp(-2 * M_PI * n)));
  auto neg = eval_phi(-3, 0, z);
  auto negw = cpow(z, 3) * std::exp(-2 * M_PI * n);
  CHECK(neg.re == doctest::Approx(negw.re));
  CHECK(neg.im == doctest::Approx(negw.im));
}

TEST_CASE("Kummer ODE holds exactly") {
  CHECK(verify_ode(2, 0));
  CHECK(verify_ode(2, 1));
  CHECK(verify_ode(5, 7));
  for (long k = -10; k <= 10; ++k)
    for (long l = 0; l <= 10; ++l) CHECK(verify_ode(k, l));
}

TEST_CASE("rotation eigenvalue") {
  CHECK(rotation_eigenvalue(2, 0) == 3);
  CHECK(rotation_eigenvalue(2, 1) == 5);
  CHECK(rotation_eigenvalue(-3, 2) == 8);
  for (long k = -10; k <= 10; ++k)
    for (long l = 0; l <= 10; ++l) CHECK(rotation_eigen_check(k, l));
  // A perturbed function is not an eigenvector.
  GaussPoly p = GaussPoly::phi(2, 1);
  p += GaussPoly::monomial(0, 0, 1);
  GaussPoly lp = p.times_wwbar() - p.d_wbar().d_w();
  CHECK(!(lp == p * Rational(5)));
}

TEST_CASE("inner product closed form") {
  CHECK(phi_inner_product<double>(2, 0) == doctest::Approx(1 / (16 * M_PI * M_PI)).epsilon(1e-14));
  CHECK(phi_inner_product<double>(0, 0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(phi_inner_product_rational_part(2, 1) == Rational(2, 3));
  for (long k = -5; k <= 5; ++k)
    for (long l = 0; l <= 5; ++l) {
      double exact = phi_inner_product<double>(k, l);
      double quad = phi_inner_product_quadrature(k, l, l);
      CHECK(std::abs(quad - exact) / exact < 1e-10);
    }
}

TEST_CASE("orthogonality in l") {
  for (long k : {0L, 2L, -3L})
    for (long l1 = 0; l1 <= 5; ++l1)
      for (long l2 = 0; l2 <= 5; ++l2) {
        if (l1 == l2) continue;
        double scale = std::sqrt(phi_inner_product<double>(k, l1) * phi_inner_product<double>(k, l2));
        CHECK(std::abs(phi_inner_product_quadrature(k, l1, l2)) / scale < 1e-9);
      }
}

TEST_CASE("Maass-Shimura relation: exact") {
  CHECK(maass_shimura_symbolic(2, 0).constant == QuadElem::rational(1, -1));
  // 3 / (2i) and 12 / (2i)^2, with (2 pi i)^{-l} kept apart.
  CHECK(maass_shimura_expected(2, 1) == QuadElem(0, Rational(-3, 2), -1));
  CHECK(maass_shimura_expected(2, 2) == QuadElem(-3, 0, -1));
  for (long k = -10; k <= 10; ++k)
    for (long l = 0; l <= 10; ++l) CHECK(maass_shimura_phi_relation(k, l));
}

TEST_CASE("Maass-Shimura relation: finite differences") {
  for (long k : {0L, 2L, -1L, 4L})
    for (long l : {1L, 2L, 3L}) CHECK(maass_shimura_fd_residual(k, l, 11 + k + l, 3) < 1e-15);
}
