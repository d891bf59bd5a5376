#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "seesaw/qfield.hpp"

namespace seesaw {

// 4x4 matrix over E = Q(sqrt(u)) in the basis v1, v2, v1', v2' of the doubled
// space, together with the parameters (u, J) of the quaternion algebra.
struct MatE {
  std::array<std::array<QuadElem, 4>, 4> m;
  long u = -7;
  Rational J = 1;

  static MatE identity(long u, const Rational& J);
  static MatE zero(long u, const Rational& J);
  QuadElem& operator()(int i, int j) { return m[i][j]; }
  const QuadElem& operator()(int i, int j) const { return m[i][j]; }
  MatE conj_transpose() const;
  friend MatE operator*(const MatE& a, const MatE& b);
  friend bool operator==(const MatE& a, const MatE& b) { return a.m == b.m; }
};

// Form matrix S = [[0, 1], [-1, 0]] (2x2 blocks) with <v_i, v_j'> = delta_ij.
MatE form_matrix(long u, const Rational& J);

// Groups act by right multiplication, so unitarity reads M S M^* = S.
bool is_unitary(const MatE& M);

// Weyl elements tau_0 = 1, tau_1, tau_2.
MatE tau(int j, long u, const Rational& J);

// g and g' attached to (alpha, beta) with Nm(alpha) = Nm(beta).
MatE build_g(const QuadElem& alpha, const QuadElem& beta, const Rational& J);
MatE build_gprime(const QuadElem& alpha, const QuadElem& beta, const Rational& J);

struct BruhatData {
  int j = 0;
  char case_tag = 'a';   // which of the four witness patterns applies
  QuadElem x;            // det of the upper-left blocks of p1 and p2
  QuadElem x_levi_Y;     // det of the lower-right blocks of p1 and p2
  QuadElem x_planewise;  // per hyperbolic plane: lower-left entry, or diagonal entry if zero
  bool consistent = true;  // x == x_planewise
  MatE p1, p2;
};

// Explicit decomposition M = p1 tau_j p2 with p1, p2 in the Siegel parabolic.
// Throws naming the witness case that failed to reconstruct M.
BruhatData bruhat_decompose(const MatE& M);

// Invariants (x(g), x(g'), j) read from the closed-form table.
struct TableRow {
  QuadElem x, x_prime;
  int j = 0;
  char case_tag = 'a';
};
TableRow table_invariants(const QuadElem& alpha, const QuadElem& beta, const Rational& J);

// Product xi(xi_arg) * xi'(xi_prime_arg) * prod (a,b)_F * gamma^gamma_exponent,
// with gamma = gamma_F(u, psi/2) subject to gamma^2 = (u,-1)_F.
struct SplitValue {
  QuadElem xi_arg;
  QuadElem xi_prime_arg;
  std::vector<std::pair<Rational, Rational>> hilbert;
  int gamma_exponent = 0;
  long u = -7;

  static SplitValue one(long u);
  static SplitValue xi(const QuadElem& a);
  static SplitValue xi_prime(const QuadElem& a);
  static SplitValue symbol(long u, const Rational& a, const Rational& b);
  static SplitValue gamma(long u);

  SplitValue inverse() const;
  friend SplitValue operator*(const SplitValue& a, const SplitValue& b);
  std::string to_string() const;
};

// Exact comparison valid at every place: after dividing, both character
// arguments must be rational (where xi = xi' = (., u)_F) and the remaining
// product of Hilbert symbols must be +1 at all places.
bool equal_everywhere(const SplitValue& a, const SplitValue& b, std::string* why = nullptr);

// hat s(g) = xi(x(g)) ((u,-1) gamma)^{-j(g)} and the primed analogue.
SplitValue s_hat(const BruhatData& d, long u);
SplitValue s_hat_prime(const BruhatData& d, long u);

// Closed forms for hat s(alpha, alpha), hat s'(alpha, alpha), hat s(1, zeta),
// hat s'(1, zeta) as printed with the diagonal and unit-norm lemmas.
SplitValue s_hat_diag(const QuadElem& alpha, const Rational& J);
SplitValue s_hat_prime_diag(const QuadElem& alpha, const Rational& J);
SplitValue s_hat_1z(const QuadElem& zeta, const Rational& J);
SplitValue s_hat_prime_1z(const QuadElem& zeta, const Rational& J);

// hat s(g1) hat s(g2) / (hat s'(g1') hat s'(g2')) for g1 = (alpha, alpha),
// g2 = (1, beta/alpha), each factor computed from its Bruhat decomposition.
SplitValue compat_ratio(const QuadElem& alpha, const QuadElem& beta, const Rational& J);

// Split-place splitting values.
SplitValue bs_D(const QuadElem& alpha, const Rational& a, const Rational& d);
SplitValue bs_U(long u, const Rational& a);
SplitValue bs_W(long u);
SplitValue bs_prime_D(const QuadElem& alpha, const Rational& a, const Rational& d);
SplitValue bs_prime_U(long u, const Rational& a);
SplitValue bs_prime_W(long u);

// gamma_F(u, psi/2) at the real place or at odd p with ord_p(u) even.
Complex<double> gamma_value(long u, const Place& v);

// Unramified characters at an odd prime p split in E: with E_p = Q_p x Q_p,
// xi(alpha) = exp(2 pi i e (v_P(alpha) - v_Pbar(alpha)) / M).
struct SplitPrimeChars {
  long p = 11;
  long M = 5, e = 1;
  long M_prime = 3, e_prime = 1;
};

// v_P(alpha) - v_Pbar(alpha) where P corresponds to a fixed square root of u mod p.
long split_valuation_difference(const QuadElem& alpha, long p);

// Concrete value as a fraction t in [0,1): the value is exp(2 pi i t).
Rational evaluate_at_split_prime(const SplitValue& s, const SplitPrimeChars& c);

struct PwpReport {
  long samples = 0;
  long passed = 0;
  std::map<char, long> case_counts;
  long compat_passed = 0;
  std::vector<std::string> failures;
};

// Random norm-equal pairs beta = alpha gamma / conj(gamma) over Q(sqrt(-7)).
PwpReport verify_pwp(long samples, std::uint64_t seed);

}  // namespace seesaw
