#include "seesaw/rallis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <set>
#include <utility>

#include <boost/math/special_functions/legendre.hpp>

#include "seesaw/config.hpp"

namespace seesaw {

namespace {

// chitilde(x) = chi(x / xbar) for the canonical family is (alpha/alphabar)^n
// on generators; eps cancels because alpha and alphabar agree mod sqrt(-7).
// It is therefore unramified at every place.
bool chi_tilde_ramified(const HeckeCharSpec&, long) { return false; }

bool chi_ramified(const HeckeCharSpec& chi, long p) { return char_conductor_exponent(chi, p) > 0; }

// chitilde at the prime above a ramified p = 7: (sqrt(-7)/-sqrt(-7))^n.
int chi_tilde_at_ramified(const HeckeCharSpec& chi) { return chi.n % 2 ? -1 : 1; }

std::vector<long> primes_below(long n) {
  std::vector<char> sieve(static_cast<std::size_t>(std::max(n, 2L)), 1);
  std::vector<long> out;
  for (long i = 2; i < n; ++i) {
    if (!sieve[i]) continue;
    out.push_back(i);
    for (long j = i * i; j < n; j += i) sieve[j] = 0;
  }
  return out;
}

int legendre7(long m) {
  static const int tab[7] = {0, 1, 1, -1, 1, -1, -1};
  return tab[((m % 7) + 7) % 7];
}

struct GL {
  std::vector<double> x, w;
};

// Gauss-Legendre rule of order n on [-1, 1].
GL gauss_legendre(int n) {
  GL g;
  for (double z : boost::math::legendre_p_zeros<double>(n)) {
    double d = boost::math::legendre_p_prime(n, z);
    double w = 2 / ((1 - z * z) * d * d);
    g.x.push_back(z);
    g.w.push_back(w);
    if (z != 0) {
      g.x.push_back(-z);
      g.w.push_back(w);
    }
  }
  return g;
}

double smoothed(const std::vector<double>& b, double X) {
  double s = 0;
  for (std::size_t m = 1; m < b.size(); ++m) s += b[m] / static_cast<double>(m) * std::exp(-static_cast<double>(m) / X);
  return s;
}

// 2 S(X) - S(X/2) removes the X^{-1} term of the smoothed sum; the change
// under X -> X/2 bounds what is left.
LValue richardson(const std::vector<double>& b, long cutoff) {
  double X = cutoff / 40.0;
  double s1 = smoothed(b, X), s2 = smoothed(b, X / 2), s4 = smoothed(b, X / 4);
  double r1 = 2 * s1 - s2, r2 = 2 * s2 - s4;
  // |b_m| <= d(m) <= 2 sqrt(m) bounds the omitted terms m > cutoff.
  double trunc = 2 * X * std::exp(-cutoff / X) / std::sqrt(static_cast<double>(cutoff));
  return {r1, std::abs(r1 - r2) + trunc};
}

Rational pow_int(const Rational& x, long e) {
  Rational r = 1;
  for (long i = 0; i < e; ++i) r *= x;
  return r;
}

}  // namespace

double LocalConstant::value() const { return from_rational<double>(rational) * std::pow(M_PI, pi_power); }

LocalConstant archimedean_table_literal(long k, long l) {
  require(l >= 0, "c_v: l must be nonnegative");
  long ak = std::abs(k);
  LocalConstant c;
  c.v = Place::infinite();
  c.row = 1;
  c.tag = "archimedean";
  // (2 pi)^2 / (4^{|k|+1} pi^{|k|+1}) * l! |k|!^2 / (l + |k|)!
  Rational R = make_rational(Integer(factorial(l) * factorial(ak) * factorial(ak)), factorial(l + ak));
  c.rational = Rational(4 * R / pow_int(Rational(4), ak + 1));
  c.pi_power = 2 - (ak + 1);
  return c;
}

LocalConstant c_v(const HeckeCharSpec& chi, const Place& v, long l) {
  if (v.is_infinite()) {
    // The worked case chi_can^2 pins C_inf = 1/(2 (l+2)(l+1) pi^2), which is
    // the table row times 2/pi; the same factor is applied for every k.
    LocalConstant c = archimedean_table_literal(chi.n, l);
    c.rational *= 2;
    c.pi_power -= 1;
    return c;
  }
  long p = v.p;
  require(p >= 2 && is_prime(p), "c_v: place must be a prime or infinity");
  LocalType t = local_type(chi.field_u, p);
  bool in_chi = chi_ramified(chi, p), in_tilde = chi_tilde_ramified(chi, p);
  const long d = 0;  // the different of Q is trivial
  Rational q = p, qi = make_rational(1, p), one = 1;
  LocalConstant c;
  c.v = v;
  c.pi_power = 0;
  auto membership = std::string(in_chi ? "in" : "notin") + " Sigma_chi, " + (in_tilde ? "in" : "notin") +
                    " Sigma_chitilde, ";
  (void)q;
  (void)d;
  switch (t) {
    case LocalType::Unramified:
      if (!in_chi && !in_tilde) c = {v, 2, membership + "unram", one, 0};
      else if (in_chi && !in_tilde) c = {v, 3, membership + "unram", Rational(one - qi * qi), 0};
      else if (in_chi && in_tilde) c = {v, 4, membership + "unram", one, 0};
      break;
    case LocalType::Ramified: {
      Rational base = Rational(qi / (one - qi * qi));
      Rational ct = chi_tilde_at_ramified(chi);
      if (!in_chi && !in_tilde) c = {v, 5, membership + "ram", Rational(base * (one - ct * qi)), 0};
      else if (in_chi && !in_tilde)
        c = {v, 6, membership + "ram", Rational(base * (one - qi) * (one - ct * qi)), 0};
      else if (in_chi && in_tilde) c = {v, 7, membership + "ram", Rational(base * (one - qi)), 0};
      break;
    }
    case LocalType::Split:
      if (!in_chi && !in_tilde) c = {v, 8, membership + "split", one, 0};
      else if (in_chi && in_tilde)
        c = {v, 10, membership + "split", Rational((one - qi) / (one + qi)), 0};
      else if (in_chi && !in_tilde)
        fail(ErrorKind::Unsupported, "c_v: row '" + membership + "split' needs chi_1 chi_2^{-1}(pi_v), which is "
                                     "not rational; no canonical-character power reaches it");
      break;
  }
  if (c.row == 0)
    fail(ErrorKind::Unsupported, "c_v: unmatched predicate combination '" + membership + "' at p = " +
                                     std::to_string(p));
  c.rational.canonicalize();
  return c;
}

long class_number(long D) {
  require(D < 0 && (((D % 4) + 4) % 4 == 0 || ((D % 4) + 4) % 4 == 1), "class_number: need a negative discriminant");
  long h = 0;
  for (long a = 1; 3 * a * a <= -D; ++a)
    for (long b = -a + 1; b <= a; ++b) {
      long num = b * b - D;
      if (num % (4 * a)) continue;
      long c = num / (4 * a);
      if (c < a) continue;
      if (c == a && b < 0) continue;
      if (std::gcd(std::gcd(a, std::abs(b)), c) != 1) continue;
      ++h;
    }
  return h;
}

double rho(long D) {
  if (D == 1) return 1.0;
  if (D >= 0) fail(ErrorKind::Unsupported, "rho: only Q and imaginary quadratic fields are supported");
  long w = D == -3 ? 6 : D == -4 ? 4 : 2;
  // r1 = 0, r2 = 1, R = 1
  return 2 * M_PI * class_number(D) / (std::sqrt(static_cast<double>(-D)) * w);
}

double l_eps_class_number(long D) { return rho(D); }

LValue l_eps_smoothed(long D, long cutoff) {
  require(D == -7, "l_eps_smoothed: only the discriminant -7 is tabulated");
  std::vector<double> b(cutoff + 1, 0.0);
  for (long m = 1; m <= cutoff; ++m) b[m] = legendre7(m);
  return richardson(b, cutoff);
}

LValue l_chi_tilde(const HeckeCharSpec& chi, long cutoff) {
  require(chi.field_u == -7, "l_chi_tilde: field must be Q(sqrt(-7))");
  require(cutoff >= 1000, "l_chi_tilde: cutoff too small");
  // b_m = sum over ideals of norm m of chitilde = (1/2) sum_{Nm alpha = m} cos(2 n arg alpha).
  std::vector<double> b(cutoff + 1, 0.0);
  const double h = std::sqrt(7.0) / 2;
  long ymax = static_cast<long>(std::sqrt(4.0 * cutoff / 7)) + 1;
  for (long y = -ymax; y <= ymax; ++y) {
    // x^2 + x y + 2 y^2 <= cutoff
    double disc = static_cast<double>(y) * y - 4.0 * (2.0 * y * y - cutoff);
    if (disc < 0) continue;
    long lo = static_cast<long>(std::floor((-y - std::sqrt(disc)) / 2)) - 1;
    long hi = static_cast<long>(std::ceil((-y + std::sqrt(disc)) / 2)) + 1;
    for (long x = lo; x <= hi; ++x) {
      long m = x * x + x * y + 2 * y * y;
      if (m == 0 || m > cutoff) continue;
      double th = std::atan2(h * y, x + 0.5 * y);
      b[m] += 0.5 * std::cos(2.0 * chi.n * th);
    }
  }
  return richardson(b, cutoff);
}

double l_chi_tilde_euler(const HeckeCharSpec& chi, long pmax) {
  require(chi.field_u == -7, "l_chi_tilde_euler: field must be Q(sqrt(-7))");
  auto primes = primes_below(pmax);
  std::vector<double> logs(primes.size());
  parallel_for(primes.size(), [&](std::size_t i) {
    long p = primes[i];
    double pd = static_cast<double>(p);
    LocalType t = local_type(-7, p);
    if (t == LocalType::Ramified) {
      logs[i] = -std::log(1 - chi_tilde_at_ramified(chi) / pd);
    } else if (t == LocalType::Unramified) {
      logs[i] = -std::log(1 - 1 / (pd * pd));
    } else {
      // 4p = (2x + y)^2 + 7 y^2
      for (long y = 1; 7 * y * y <= 4 * p; ++y) {
        long s = 4 * p - 7 * y * y;
        long r = std::lround(std::sqrt(static_cast<double>(s)));
        if (r * r != s) continue;
        double th = std::atan2(std::sqrt(7.0) * y, static_cast<double>(r));
        double c = std::cos(2.0 * chi.n * th);
        // (1 - lambda/p)(1 - conj(lambda)/p) with |lambda| = 1
        logs[i] = -std::log(1 - 2 * c / pd + 1 / (pd * pd));
        break;
      }
    }
  });
  double s = 0;
  for (double v : logs) s += v;
  return std::exp(s);
}

AdjointL l_adjoint(const HeckeCharSpec& chi, long cutoff, double target) {
  AdjointL out;
  out.chi_tilde = l_chi_tilde(chi, cutoff);
  out.eps.value = l_eps_class_number(-7);
  out.eps.error_bound = 1e-15;
  out.value = out.chi_tilde.value * out.eps.value;
  out.error_bound = out.chi_tilde.error_bound * out.eps.value + out.eps.error_bound * out.chi_tilde.value;
  if (out.error_bound > target * std::abs(out.value))
    fail(ErrorKind::NotConverged, "l_adjoint: relative error " + format_real(out.error_bound / std::abs(out.value)) +
                                      " above target at cutoff " + std::to_string(cutoff));
  return out;
}

namespace {

using Mat2 = std::array<long, 4>;

// Orbit of a bottom row under right multiplication by generators mod N; rows
// are reduced by `canon` first.
template <class Canon>
long orbit_size(long N, const std::vector<Mat2>& gens, Canon canon) {
  std::set<std::pair<long, long>> seen;
  std::vector<std::pair<long, long>> stack{canon(0, 1)};
  seen.insert(stack.back());
  while (!stack.empty()) {
    auto [c, d] = stack.back();
    stack.pop_back();
    for (const auto& g : gens) {
      auto next = canon(((c * g[0] + d * g[2]) % N + N) % N, ((c * g[1] + d * g[3]) % N + N) % N);
      if (seen.insert(next).second) stack.push_back(next);
    }
  }
  return static_cast<long>(seen.size());
}

std::pair<long, long> up_to_units(long N, long c, long d) {
  std::pair<long, long> best{N, N};
  for (long u = 1; u < N; ++u) {
    if (std::gcd(u, N) != 1) continue;
    std::pair<long, long> r{c * u % N, d * u % N};
    best = std::min(best, r);
  }
  return best;
}

const std::vector<Mat2> kSL2Gens = {Mat2{0, -1, 1, 0}, Mat2{1, 1, 0, 1}};

}  // namespace

long index_k0_k(long N) {
  require(N >= 2 && is_prime(N), "index_k0_k: N must be prime");
  auto gens = kSL2Gens;
  for (long a = 2; a < N; ++a) gens.push_back(Mat2{a, 0, 0, 1});
  return orbit_size(N, gens, [N](long c, long d) { return up_to_units(N, c, d); });
}

long index_psl2_gamma1(long N) {
  require(N >= 2, "index_psl2_gamma1: N must be at least 2");
  long n = orbit_size(N, kSL2Gens, [](long c, long d) { return std::pair<long, long>{c, d}; });
  return N > 2 ? n / 2 : n;
}

long index_psl2_gamma0(long N) {
  require(N >= 2, "index_psl2_gamma0: N must be at least 2");
  return orbit_size(N, kSL2Gens, [N](long c, long d) { return up_to_units(N, c, d); });
}

Rational ell_p(const HeckeCharSpec& chi, long p) {
  long N = newform_level(chi);
  if (N % p) return 1;
  long r = 0;
  for (long m = N; m % p == 0; m /= p) ++r;
  // chi_can^n is its own minimal twist. The nebentypus is eps_{-7} times
  // chi restricted to Z over |.|^n, of conductor 7 for even n and 1 for odd n.
  long r_chi = (p == 7 && chi.n % 2 == 0) ? 1 : 0;
  Rational one = 1, pinv = make_rational(1, p);
  if (r >= 1 && r == r_chi) return Rational(one + pinv);  // p^{r_g} || N
  if (r >= 2 && r > r_chi) return 1;
  fail(ErrorKind::Unsupported, "ell_p: no row of the table matches at p = " + std::to_string(p));
}

namespace {

double petersson_at(const NearlyHolomorphic& F, long level, int depth) {
  const double w = static_cast<double>(F.weight + 2 * F.l);
  GL gx = gauss_legendre(30 * depth), gy = gauss_legendre(20 * depth);
  const std::array<double, 5> top = {1.5, 3, 6, 10, 22};
  struct Node {
    Complex<double> tau;
    double weight;
  };
  std::vector<Node> nodes;
  for (std::size_t i = 0; i < gx.x.size(); ++i) {
    double x = 0.5 * gx.x[i], wx = 0.5 * gx.w[i];
    double lo = std::sqrt(1 - x * x);
    for (double hi : top) {
      for (std::size_t j = 0; j < gy.x.size(); ++j) {
        double half = 0.5 * (hi - lo);
        double y = lo + half * (1 + gy.x[j]);
        nodes.push_back({Complex<double>(x, y), wx * half * gy.w[j] / (y * y)});
      }
      lo = hi;
    }
  }
  // Gamma_0(N)\h = F + sum_j S T^j F. On S T^j F the invariance of |F|^2 y^w
  // under the Fricke involution moves tau to (tau + j)/N, away from the cusp 0.
  std::vector<Complex<double>> pts;
  pts.reserve(nodes.size() * (level + 1));
  for (const auto& n : nodes) {
    pts.push_back(n.tau);
    for (long j = 0; j < level; ++j)
      pts.push_back(Complex<double>((n.tau.re + j) / level, n.tau.im / level));
  }
  const std::size_t chunk = 4096, nchunks = (pts.size() + chunk - 1) / chunk;
  std::vector<double> vals(pts.size());
  parallel_for(nchunks, [&](std::size_t c) {
    std::size_t lo = c * chunk, hi = std::min(pts.size(), lo + chunk);
    std::vector<Complex<double>> sub(pts.begin() + lo, pts.begin() + hi);
    auto ev = evaluate_batch(F, sub);
    for (std::size_t i = 0; i < ev.size(); ++i)
      vals[lo + i] = ev[i].norm() * std::pow(sub[i].im, w);
  });
  double total = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    double s = 0;
    for (long j = 0; j <= level; ++j) s += vals[i * (level + 1) + j];
    total += nodes[i].weight * s;
  }
  double vol = static_cast<double>(index_psl2_gamma0(level)) * M_PI / 3;
  return total / vol;
}

}  // namespace

PeterssonResult petersson_numeric(const NearlyHolomorphic& F, long level, int depth, double error_tolerance) {
  require(level >= 2 && is_prime(level), "petersson_numeric: level must be prime");
  require(depth >= 1 && depth <= 6, "petersson_numeric: depth must lie in [1, 6]");
  require(F.truncation() >= 50, "petersson_numeric: too few coefficients");
  PeterssonResult r;
  r.terms = F.truncation();
  r.value = petersson_at(F, level, depth);
  r.refined = petersson_at(F, level, depth + 1);
  r.error_estimate = std::abs(r.value - r.refined);
  if (!(r.value > 0) || r.error_estimate > error_tolerance * r.value)
    fail(ErrorKind::NotConverged, "petersson_numeric: quadrature error estimate " +
                                      format_real(r.error_estimate / r.value) + " above tolerance");
  return r;
}

RallisReport rallis_check(const HeckeCharSpec& chi, long l, long cutoff, int depth, double tolerance) {
  require(chi.field_u == -7 && chi.n == 2, "rallis_check: only chi_can^2 is supported");
  require(l >= 0 && l <= 3, "rallis_check: l must lie in [0, 3]");
  const long k = chi.n, kappa = k + 1, N = newform_level(chi);
  RallisReport rep;
  rep.l = l;
  auto& pf = rep.per_factor;

  std::vector<Place> bad = {Place::infinite()};
  for (long p : primes_below(N + 1))
    if (N % p == 0) bad.push_back(Place::finite(p));
  double prodC = 1, prodC0 = 1;
  for (const auto& v : bad) {
    double c = c_v(chi, v, l).value();
    prodC *= c;
    prodC0 *= c_v(chi, v, 0).value();
    pf["C_" + v.to_string()] = c;
  }
  pf["prod_C"] = prodC;

  const double rhoF = rho(1), rhoE = rho(-7), zeta2 = M_PI * M_PI / 6;
  LValue L = l_chi_tilde(chi, cutoff);
  pf["rho_F"] = rhoF;
  pf["rho_E"] = rhoE;
  pf["zeta_2"] = zeta2;
  pf["L_chi_tilde"] = L.value;
  rep.rhs = rhoF / rhoE * L.value / zeta2 * prodC;
  rep.rhs_error_bound = rep.rhs * L.error_bound / L.value;

  double ell = 1;
  for (const auto& v : bad)
    if (!v.is_infinite()) ell *= from_rational<double>(ell_p(chi, v.p));
  const double k0k = static_cast<double>(index_k0_k(N)), g1 = static_cast<double>(index_psl2_gamma1(N));
  pf["ell_prod"] = ell;
  pf["index_K0_K"] = k0k;
  pf["index_Gamma1"] = g1;

  QExpansion f = qexp_from_ideals(chi, 600);
  PeterssonResult pet = petersson_numeric(maass_shimura_apply(f, kappa, l), N, depth);
  pf["petersson_classical"] = pet.value;
  double adelic = 2 * M_PI / zeta2 / 2 / k0k * (M_PI / 3) * g1 * pet.value;
  pf["petersson_adelic"] = adelic;

  double Cl = maass_shimura_scalar<double>(kappa, l);
  double D2 = 1 / (Cl * Cl) / (rhoE * rhoE) * prodC0 * zeta2 / (2 * M_PI) * 2 * k0k / ((M_PI / 3) * g1) *
              std::pow(4 * M_PI, kappa) / from_rational<double>(Rational(factorial(k))) * ell;
  pf["D_l_squared"] = D2;
  rep.lhs = D2 * adelic;
  rep.lhs_error_bound = rep.lhs * pet.error_estimate / pet.value;
  rep.deviation = std::abs(rep.lhs / rep.rhs - 1);
  rep.passed = rep.deviation < tolerance;
  return rep;
}

}  // namespace seesaw
