#pragma once

#include <map>
#include <string>
#include <vector>

#include "seesaw/hecke.hpp"
#include "seesaw/qfield.hpp"
#include "seesaw/thetalift.hpp"

namespace seesaw {

// Local constant C_v. The value is rational * pi^pi_power.
struct LocalConstant {
  Place v;
  int row = 0;  // 1 = archimedean, 2..10 follow the finite rows of the table
  std::string tag;
  Rational rational = 1;
  int pi_power = 0;
  double value() const;
};

// Sigma_chi and Sigma_chitilde are read as the sets of places where the
// character is ramified; with that reading C_v = 1 away from finitely many v.
// At the real place the value follows the worked example for chi_can^2:
// the general row times 2/pi (see archimedean_table_literal).
LocalConstant c_v(const HeckeCharSpec& chi, const Place& v, long l);
LocalConstant archimedean_table_literal(long k, long l);

// Residue constants 2^{r1} (2 pi)^{r2} h R / (sqrt|D| w): D = 1 for Q, D < 0
// for an imaginary quadratic field of discriminant D.
double rho(long D);
long class_number(long D);  // reduced forms of discriminant D < 0
inline constexpr double kVolC1Factor = 2.0;  // vol(C^1) = 2 pi

struct LValue {
  double value = 0;
  double error_bound = 0;
};

// L(1, chitilde) by a smoothed Dirichlet series with Richardson extrapolation
// over the first M coefficients, M = cutoff.
LValue l_chi_tilde(const HeckeCharSpec& chi, long cutoff);
// Truncated Euler product over p < pmax, a slowly converging cross-check.
double l_chi_tilde_euler(const HeckeCharSpec& chi, long pmax);
// L(1, eps_{E/F}) from the class number formula and by a smoothed sum.
double l_eps_class_number(long D);
LValue l_eps_smoothed(long D, long cutoff);

struct AdjointL {
  LValue chi_tilde, eps;
  double value = 0;  // L(1, chitilde) L(1, eps)
  double error_bound = 0;
};
AdjointL l_adjoint(const HeckeCharSpec& chi, long cutoff, double target = 1e-6);

// Coset counts by enumeration over Z/NZ.
long index_k0_k(long N);                  // [GL2(Z_N) : K_0(N)] for prime N
long index_psl2_gamma1(long N);           // [PSL2(Z) : Gamma_1(N)]
long index_psl2_gamma0(long N);           // [PSL2(Z) : Gamma_0(N)]

// ell_p for the newform attached to chi, with the twist-minimal twist read
// off the conductor data (for chi_can^n the form is its own minimal twist).
Rational ell_p(const HeckeCharSpec& chi, long p);

struct PeterssonResult {
  double value = 0;
  double refined = 0;
  double error_estimate = 0;
  long terms = 0;
};

// Volume-normalized Petersson norm of delta^l f for prime level N, integrating
// |F|^2 y^{weight} over Gamma_0(N)\h, which suffices since |F|^2 y^weight is
// Gamma_0(N)-invariant for a nebentypus form. depth scales the Gauss-Legendre
// orders; the estimate compares depth and depth + 1.
PeterssonResult petersson_numeric(const NearlyHolomorphic& F, long level, int depth = 2,
                                  double error_tolerance = 1e-6);

struct RallisReport {
  long l = 0;
  double rhs = 0, lhs = 0, deviation = 0;
  double lhs_error_bound = 0, rhs_error_bound = 0;
  std::map<std::string, double> per_factor;
  bool passed = false;
};

// Compares Rallis RHS rho_F/rho_E L(1,chitilde)/zeta(2) prod C_v against
// |D_l|^2 <F^l, F^l> with the adelic norm obtained from the numeric Petersson
// norm of delta^l f.
RallisReport rallis_check(const HeckeCharSpec& chi, long l, long cutoff = 400000, int depth = 2,
                          double tolerance = 1e-3);

}  // namespace seesaw
