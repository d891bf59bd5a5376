#include "seesaw/weilrep.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace seesaw {

namespace {

QuadElem q(const Rational& a, long u) { return QuadElem::rational(a, u); }

QuadElem det2(const MatE& M, int r, int c) {
  return M(r, c) * M(r + 1, c + 1) - M(r, c + 1) * M(r + 1, c);
}

}  // namespace

MatE MatE::zero(long u, const Rational& J) {
  MatE M;
  M.u = u;
  M.J = J;
  for (auto& row : M.m)
    for (auto& e : row) e = q(0, u);
  return M;
}

MatE MatE::identity(long u, const Rational& J) {
  MatE M = zero(u, J);
  for (int i = 0; i < 4; ++i) M(i, i) = q(1, u);
  return M;
}

MatE MatE::conj_transpose() const {
  MatE T = zero(u, J);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) T(i, j) = m[j][i].conj();
  return T;
}

MatE operator*(const MatE& a, const MatE& b) {
  MatE c = MatE::zero(a.u, a.J);
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      if (a(i, k).is_zero()) continue;
      for (int j = 0; j < 4; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

MatE form_matrix(long u, const Rational& J) {
  MatE S = MatE::zero(u, J);
  S(0, 2) = S(1, 3) = q(1, u);
  S(2, 0) = S(3, 1) = q(-1, u);
  return S;
}

bool is_unitary(const MatE& M) {
  MatE S = form_matrix(M.u, M.J);
  return M * S * M.conj_transpose() == S;
}

MatE tau(int j, long u, const Rational& J) {
  MatE T = MatE::zero(u, J);
  switch (j) {
    case 0: return MatE::identity(u, J);
    case 1:
      T(0, 0) = T(2, 2) = T(3, 1) = q(1, u);
      T(1, 3) = q(-1, u);
      return T;
    case 2:
      T(2, 0) = T(3, 1) = q(1, u);
      T(0, 2) = T(1, 3) = q(-1, u);
      return T;
  }
  fail(ErrorKind::InvalidArgument, "tau: j must be 0, 1 or 2");
}

namespace {

MatE build(const QuadElem& alpha, const QuadElem& beta, const Rational& J, bool prime) {
  require(!alpha.is_zero() && !beta.is_zero(), "build_g: zero argument");
  require(alpha.u() == beta.u(), "build_g: arguments in different fields");
  require(sgn(J) != 0, "build_g: J must be nonzero");
  if (alpha.norm() != beta.norm()) fail(ErrorKind::InvalidArgument, "build_g: Nm(alpha) != Nm(beta)");
  long u = alpha.u();
  QuadElem one = q(1, u), bi = QuadElem::sqrt_u(u), U = q(u, u), JJ = q(J, u), half = q(Rational(1, 2), u);
  QuadElem r = beta / alpha;
  QuadElem s = prime ? beta / alpha.conj() : beta.conj() / alpha;
  QuadElem sg = q(prime ? 1 : -1, u);
  MatE M = MatE::zero(u, J);
  M(0, 0) = M(2, 2) = (one + r) * half;
  M(0, 2) = (one - r) * bi / (q(4, u) * U);
  M(2, 0) = (one - r) * bi;
  M(1, 1) = M(3, 3) = (one + s) * half;
  M(1, 3) = sg * (one - s) * bi / (q(4, u) * U * JJ);
  M(3, 1) = sg * (one - s) * bi * JJ;
  return M;
}

}  // namespace

MatE build_g(const QuadElem& alpha, const QuadElem& beta, const Rational& J) {
  return build(alpha, beta, J, false);
}

MatE build_gprime(const QuadElem& alpha, const QuadElem& beta, const Rational& J) {
  return build(alpha, beta, J, true);
}

BruhatData bruhat_decompose(const MatE& M) {
  long u = M.u;
  QuadElem zero = q(0, u), one = q(1, u), two = q(2, u), bi = QuadElem::sqrt_u(u), U = q(u, u);
  auto pattern_fail = [](const std::string& why) {
    fail(ErrorKind::InvalidArgument, "bruhat_decompose: not a torus image (" + why + ")");
  };
  static const int kZeroPos[8][2] = {{0, 1}, {0, 3}, {1, 0}, {1, 2}, {2, 1}, {2, 3}, {3, 0}, {3, 2}};
  for (auto& p : kZeroPos)
    if (!M(p[0], p[1]).is_zero()) pattern_fail("off-plane entry nonzero");
  if (M(2, 2) != M(0, 0) || M(3, 3) != M(1, 1)) pattern_fail("diagonal blocks differ");
  if (!is_unitary(M)) pattern_fail("not unitary");

  QuadElem r = two * M(0, 0) - one;
  QuadElem s = two * M(1, 1) - one;
  if (M(2, 0) != (one - r) * bi || M(0, 2) != (one - r) * bi / (q(4, u) * U))
    pattern_fail("first plane does not match (1 +- r)/2 pattern");
  // The primed matrix is the unprimed formula with J replaced by -J; recover
  // the effective J from the second plane.
  QuadElem Jq = q(M.J, u);
  if (s != one) {
    Jq = -M(3, 1) / ((one - s) * bi);
    if (!Jq.is_rational()) pattern_fail("second plane J is not rational");
    if (M(1, 3) != -(one - s) * bi / (q(4, u) * U * Jq)) pattern_fail("second plane inconsistent");
  } else if (!M(1, 3).is_zero() || !M(3, 1).is_zero()) {
    pattern_fail("second plane should be trivial");
  }

  BruhatData d;
  d.p1 = MatE::identity(u, M.J);
  d.p2 = MatE::identity(u, M.J);
  QuadElem half = q(Rational(1, 2), u);
  bool r1 = r == one, s1 = s == one;
  if (r1 && s1) {
    d.case_tag = 'a';
    d.j = 0;
  } else if (r1) {
    d.case_tag = 'b';
    d.j = 1;
    QuadElem c = (s - one) * bi * Jq;
    d.p1(1, 3) = (one + s) / (two * c);
    d.p2(1, 1) = c;
    d.p2(1, 3) = (one + s) * half;
    d.p2(3, 3) = s / c;
  } else if (s1) {
    d.case_tag = 'c';
    d.j = 1;
    QuadElem c = (one - r) * bi;
    d.p1 = MatE::zero(u, M.J);
    d.p1(0, 1) = d.p1(1, 0) = d.p1(2, 3) = d.p1(3, 2) = one;
    d.p1(0, 3) = (one + r) / (two * c);
    d.p2 = MatE::zero(u, M.J);
    d.p2(0, 1) = d.p2(2, 3) = one;
    d.p2(1, 0) = c;
    d.p2(1, 2) = (one + r) * half;
    d.p2(3, 2) = r / c;
  } else {
    d.case_tag = 'd';
    d.j = 2;
    QuadElem c1 = (one - r) * bi, c2 = (one - s) * bi * Jq;
    d.p1(0, 2) = (one + r) / (two * c1);
    d.p1(1, 3) = -(one + s) / (two * c2);
    d.p2 = MatE::zero(u, M.J);
    d.p2(0, 0) = c1;
    d.p2(0, 2) = (one + r) * half;
    d.p2(1, 1) = -c2;
    d.p2(1, 3) = (one + s) * half;
    d.p2(2, 2) = r / c1;
    d.p2(3, 3) = -s / c2;
  }
  if (d.p1 * tau(d.j, u, M.J) * d.p2 != M)
    fail(ErrorKind::VerificationFailed,
         std::string("bruhat_decompose: witness for case (") + d.case_tag + ") does not reconstruct M");
  for (const MatE* p : {&d.p1, &d.p2}) {
    for (int i = 2; i < 4; ++i)
      for (int j = 0; j < 2; ++j)
        if (!(*p)(i, j).is_zero())
          fail(ErrorKind::VerificationFailed,
               std::string("bruhat_decompose: witness for case (") + d.case_tag + ") leaves the parabolic");
    if (!is_unitary(*p))
      fail(ErrorKind::VerificationFailed,
           std::string("bruhat_decompose: witness for case (") + d.case_tag + ") is not unitary");
  }
  d.x = det2(d.p1, 0, 0) * det2(d.p2, 0, 0);
  d.x_levi_Y = det2(d.p1, 2, 2) * det2(d.p2, 2, 2);
  d.x_planewise = one;
  for (int k = 0; k < 2; ++k) d.x_planewise *= M(k + 2, k).is_zero() ? M(k, k) : M(k + 2, k);
  d.consistent = d.x == d.x_planewise;
  (void)zero;
  return d;
}

TableRow table_invariants(const QuadElem& alpha, const QuadElem& beta, const Rational& J) {
  long u = alpha.u();
  QuadElem one = q(1, u), bi = QuadElem::sqrt_u(u), uJ = q(Rational(u) * J, u), JJ = q(J, u);
  QuadElem r = beta / alpha, s = beta.conj() / alpha, sp = beta / alpha.conj();
  TableRow t;
  if (r == one && s == one) {
    t = {one, one, 0, 'a'};
  } else if (r == one) {
    t = {-(one - s) * bi * JJ, (one - sp) * bi * JJ, 1, 'b'};
  } else if (s == one) {
    t = {(one - r) * bi, (one - r) * bi, 1, 'c'};
  } else {
    t = {-(one - r) * (one - s) * uJ, (one - r) * (one - sp) * uJ, 2, 'd'};
  }
  return t;
}

// ---- splitting values ----

SplitValue SplitValue::one(long u) {
  SplitValue s;
  s.u = u;
  s.xi_arg = s.xi_prime_arg = q(1, u);
  return s;
}

SplitValue SplitValue::xi(const QuadElem& a) {
  SplitValue s = one(a.u());
  s.xi_arg = a;
  return s;
}

SplitValue SplitValue::xi_prime(const QuadElem& a) {
  SplitValue s = one(a.u());
  s.xi_prime_arg = a;
  return s;
}

SplitValue SplitValue::symbol(long u, const Rational& a, const Rational& b) {
  SplitValue s = one(u);
  s.hilbert.emplace_back(a, b);
  return s;
}

SplitValue SplitValue::gamma(long u) {
  SplitValue s = one(u);
  s.gamma_exponent = 1;
  return s;
}

SplitValue operator*(const SplitValue& a, const SplitValue& b) {
  SplitValue c = a;
  c.xi_arg *= b.xi_arg;
  c.xi_prime_arg *= b.xi_prime_arg;
  c.hilbert.insert(c.hilbert.end(), b.hilbert.begin(), b.hilbert.end());
  c.gamma_exponent += b.gamma_exponent;
  while (c.gamma_exponent >= 2) {
    c.gamma_exponent -= 2;
    c.hilbert.emplace_back(Rational(c.u), Rational(-1));
  }
  return c;
}

SplitValue SplitValue::inverse() const {
  SplitValue c = *this;
  c.xi_arg = xi_arg.inverse();
  c.xi_prime_arg = xi_prime_arg.inverse();
  // Hilbert symbols are +-1; gamma^{-1} = gamma (u,-1).
  if (gamma_exponent == 1) c.hilbert.emplace_back(Rational(u), Rational(-1));
  return c;
}

std::string SplitValue::to_string() const {
  std::ostringstream os;
  os << "xi(" << xi_arg.to_string() << ") xi'(" << xi_prime_arg.to_string() << ")";
  for (auto& [a, b] : hilbert) os << " (" << a.get_str() << "," << b.get_str() << ")";
  if (gamma_exponent) os << " gamma";
  return os.str();
}

bool equal_everywhere(const SplitValue& a, const SplitValue& b, std::string* why) {
  SplitValue r = a * b.inverse();
  auto say = [why](const std::string& w) {
    if (why) *why = w;
    return false;
  };
  if (!r.xi_arg.is_rational()) return say("xi arguments differ by a non-rational factor");
  if (!r.xi_prime_arg.is_rational()) return say("xi' arguments differ by a non-rational factor");
  if (r.gamma_exponent != 0) return say("gamma exponents differ");
  // On F^x both xi and xi' restrict to the quadratic character (., u)_F.
  r.hilbert.emplace_back(r.xi_arg.a(), Rational(r.u));
  r.hilbert.emplace_back(r.xi_prime_arg.a(), Rational(r.u));
  std::set<Place> places;
  for (auto& [x, y] : r.hilbert)
    for (const Place& v : hilbert_support(x, y)) places.insert(v);
  for (const Place& v : places) {
    int prod = 1;
    for (auto& [x, y] : r.hilbert) prod *= hilbert_symbol(x, y, v);
    if (prod != 1) return say("Hilbert symbol product is -1 at " + v.to_string());
  }
  return true;
}

namespace {
SplitValue from_bruhat(const BruhatData& d, long u, bool prime) {
  SplitValue s = prime ? SplitValue::xi_prime(d.x) : SplitValue::xi(d.x);
  // ((u,-1) gamma)^{-1} = gamma and ((u,-1) gamma)^{-2} = (u,-1).
  if (d.j == 1) s = s * SplitValue::gamma(u);
  if (d.j == 2) s = s * SplitValue::symbol(u, u, -1);
  return s;
}
}  // namespace

SplitValue s_hat(const BruhatData& d, long u) { return from_bruhat(d, u, false); }
SplitValue s_hat_prime(const BruhatData& d, long u) { return from_bruhat(d, u, true); }

namespace {
SplitValue diag_common(const QuadElem& alpha, const Rational& J) {
  long u = alpha.u();
  if (alpha.is_rational()) return SplitValue::symbol(u, alpha.a(), u);
  return SplitValue::symbol(u, -2 * alpha.b() * u * J, u) * SplitValue::gamma(u) *
         SplitValue::symbol(u, -1, -u);
}
}  // namespace

SplitValue s_hat_diag(const QuadElem& alpha, const Rational& J) {
  return SplitValue::xi(alpha.inverse()) * diag_common(alpha, J);
}

SplitValue s_hat_prime_diag(const QuadElem& alpha, const Rational& J) {
  return SplitValue::xi_prime(alpha.conj().inverse()) * diag_common(alpha, J);
}

SplitValue s_hat_1z(const QuadElem& zeta, const Rational& J) {
  require(zeta.norm() == 1, "s_hat_1z: zeta must have norm 1");
  long u = zeta.u();
  if (zeta.a() == 1) return SplitValue::one(u);
  return SplitValue::symbol(u, (2 - 2 * zeta.a()) * u * J, u);
}

SplitValue s_hat_prime_1z(const QuadElem& zeta, const Rational& J) {
  require(zeta.norm() == 1, "s_hat_prime_1z: zeta must have norm 1");
  long u = zeta.u();
  if (zeta.a() == 1) return SplitValue::one(u);
  return SplitValue::xi_prime(zeta) * SplitValue::symbol(u, (2 - 2 * zeta.a()) * u * J, u);
}

SplitValue compat_ratio(const QuadElem& alpha, const QuadElem& beta, const Rational& J) {
  if (alpha.norm() != beta.norm()) fail(ErrorKind::InvalidArgument, "compat_ratio: Nm(alpha) != Nm(beta)");
  long u = alpha.u();
  QuadElem one = q(1, u), zeta = beta / alpha;
  auto g1 = bruhat_decompose(build_g(alpha, alpha, J));
  auto g2 = bruhat_decompose(build_g(one, zeta, J));
  auto h1 = bruhat_decompose(build_gprime(alpha, alpha, J));
  auto h2 = bruhat_decompose(build_gprime(one, zeta, J));
  return s_hat(g1, u) * s_hat(g2, u) * (s_hat_prime(h1, u) * s_hat_prime(h2, u)).inverse();
}

SplitValue bs_D(const QuadElem& alpha, const Rational& a, const Rational& d) {
  long u = alpha.u();
  require(alpha.norm() == a * d, "bs_D: similitudes do not match (Nm(alpha) != ad)");
  QuadElem one = q(1, u), ai = alpha.inverse();
  if (alpha == one && a == 1 && d == 1) return SplitValue::one(u);
  QuadElem x = -(ai * q(a, u) - one) * (ai * q(d, u) - one);
  if (x.is_zero()) fail(ErrorKind::Unsupported, "bs_D: degenerate argument (alpha = a = d)");
  return SplitValue::xi(x);
}

SplitValue bs_U(long u, const Rational&) { return SplitValue::one(u); }

SplitValue bs_W(long u) { return SplitValue::symbol(u, u, -1) * SplitValue::gamma(u); }

SplitValue bs_prime_D(const QuadElem& alpha, const Rational& a, const Rational& d) {
  long u = alpha.u();
  require(alpha.norm() == a * d, "bs_prime_D: similitudes do not match (Nm(alpha) != ad)");
  QuadElem one = q(1, u);
  if (alpha == one && a == 1 && d == 1) return SplitValue::one(u);
  QuadElem x = -(alpha / q(a, u) - one) * (alpha / q(d, u) - one);
  if (x.is_zero()) fail(ErrorKind::Unsupported, "bs_prime_D: degenerate argument (alpha = a = d)");
  return SplitValue::xi_prime(x);
}

SplitValue bs_prime_U(long u, const Rational&) { return SplitValue::one(u); }

SplitValue bs_prime_W(long u) { return bs_W(u); }

Complex<double> gamma_value(long u, const Place& v) {
  if (v.is_infinite()) return u < 0 ? Complex<double>(0.0, -1.0) : Complex<double>(1.0);
  if (v.p != 2 && valuation(Integer(u), v.p) % 2 == 0) return Complex<double>(1.0);
  fail(ErrorKind::Unsupported, "gamma_value: only the real place and odd p with ord(u) even");
}

namespace {

Integer sqrt_mod_prime_power(long u, long p, long k) {
  long s0 = -1;
  long ur = ((u % p) + p) % p;
  for (long r = 1; r < p; ++r)
    if ((r * r) % p == ur) {
      s0 = r;
      break;
    }
  if (s0 < 0) fail(ErrorKind::InvalidArgument, "u is not a square mod p");
  Integer mod = p, s = s0;
  for (long i = 1; i < k; ++i) {
    mod *= p;
    // Newton step s <- s - (s^2 - u) / (2s) mod p^{i+1}.
    Integer inv, two_s = 2 * s;
    mpz_invert(inv.get_mpz_t(), two_s.get_mpz_t(), mod.get_mpz_t());
    s = (s - (s * s - u) * inv) % mod;
    if (s < 0) s += mod;
  }
  return s;
}

}  // namespace

long split_valuation_difference(const QuadElem& alpha, long p) {
  require(!alpha.is_zero(), "split_valuation_difference: zero");
  long u = alpha.u();
  require(legendre(u, p) == 1, "split_valuation_difference: p is not split");
  Integer D;
  mpz_lcm(D.get_mpz_t(), alpha.a().get_den_mpz_t(), alpha.b().get_den_mpz_t());
  Integer A = Integer(alpha.a() * D), B = Integer(alpha.b() * D);
  Integer N = A * A - u * B * B;
  long vN = valuation(N, p);
  if (vN == 0) return 0;
  long K = vN + 1;
  Integer mod = 1;
  for (long i = 0; i < K; ++i) mod *= p;
  Integer s = sqrt_mod_prime_power(u, p, K);
  Integer t = (A + B * s) % mod;
  if (t < 0) t += mod;
  long vP = valuation(t, p);
  return 2 * vP - vN;
}

Rational evaluate_at_split_prime(const SplitValue& s, const SplitPrimeChars& c) {
  Rational t = make_rational(c.e * split_valuation_difference(s.xi_arg, c.p), c.M) +
               make_rational(c.e_prime * split_valuation_difference(s.xi_prime_arg, c.p), c.M_prime);
  for (auto& [a, b] : s.hilbert)
    if (hilbert_symbol(a, b, Place::finite(c.p)) == -1) t += Rational(1, 2);
  // gamma = 1 at an odd split prime (ord_p(u) = 0).
  (void)gamma_value(s.u, Place::finite(c.p));
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
  t -= fl;
  return t;
}

PwpReport verify_pwp(long samples, std::uint64_t seed) {
  const long u = -7;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-9, 9);
  const std::vector<Rational> Js = {1, Rational(1, 7), Rational(-1, 7), 2, Rational(-3, 5)};
  const std::vector<long> split_primes = {11, 23, 29, 37, 43, 53, 67, 71, 79};
  QuadElem omega(Rational(1, 2), Rational(1, 2), u);
  auto rand_elem = [&](bool irrational) {
    for (;;) {
      long x = coord(rng), y = coord(rng);
      if (irrational && y == 0) continue;
      if (!irrational) y = 0;
      QuadElem a = QuadElem::rational(x, u) + QuadElem::rational(y, u) * omega;
      if (!a.is_zero()) return a;
    }
  };
  PwpReport rep;
  rep.samples = samples;
  for (long i = 0; i < samples; ++i) {
    int kind = static_cast<int>(rng() % 4);
    QuadElem alpha = rand_elem(kind != 0), beta = alpha;
    if (kind == 2) beta = alpha.conj();
    if (kind == 3) {
      QuadElem g = rand_elem(true);
      beta = alpha * g / g.conj();
    }
    Rational J = Js[rng() % Js.size()];
    std::ostringstream tag;
    tag << "alpha=" << alpha.to_string() << " beta=" << beta.to_string() << " J=" << J.get_str();
    try {
      auto row = table_invariants(alpha, beta, J);
      auto dg = bruhat_decompose(build_g(alpha, beta, J));
      auto dh = bruhat_decompose(build_gprime(alpha, beta, J));
      rep.case_counts[dg.case_tag]++;
      bool ok = dg.j == row.j && dh.j == row.j && dg.x == row.x && dh.x == row.x_prime &&
                dg.case_tag == row.case_tag && dg.consistent && dh.consistent;
      if (ok) {
        rep.passed++;
      } else {
        rep.failures.push_back("table mismatch: " + tag.str());
      }
      SplitValue ratio = compat_ratio(alpha, beta, J);
      SplitValue expect = SplitValue::xi(alpha.inverse()) * SplitValue::xi_prime(beta.inverse());
      SplitPrimeChars c;
      c.p = split_primes[rng() % split_primes.size()];
      c.M = 2 + static_cast<long>(rng() % 11);
      c.e = 1 + static_cast<long>(rng() % c.M);
      c.M_prime = 2 + static_cast<long>(rng() % 11);
      c.e_prime = 1 + static_cast<long>(rng() % c.M_prime);
      std::string why;
      bool sym = equal_everywhere(ratio, expect, &why);
      bool num = evaluate_at_split_prime(ratio, c) == evaluate_at_split_prime(expect, c);
      if (sym && num) {
        rep.compat_passed++;
      } else {
        rep.failures.push_back("compat mismatch (" + why + "): " + tag.str());
      }
    } catch (const Error& e) {
      rep.failures.push_back(std::string(e.what()) + ": " + tag.str());
    }
  }
  return rep;
}

}  // namespace seesaw
