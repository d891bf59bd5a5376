#pragma once

#include <cmath>
#include <vector>

#include "seesaw/errors.hpp"
#include "seesaw/hecke.hpp"
#include "seesaw/numeric.hpp"
#include "seesaw/schwartz.hpp"

namespace seesaw {

// x + y*omega in O_E, omega = (1 + sqrt(-7))/2, with Nm = x^2 + xy + 2y^2.
struct LatticePoint {
  long x = 0, y = 0;
  long norm = 0;
};

// All nonzero points with norm <= R, sorted by (norm, x, y).
std::vector<LatticePoint> lattice_points(long R);

// sum_n a_n q^n with exact integer coefficients; a[0] = 0.
struct QExpansion {
  long weight = 0;
  long level = 0;
  long char_power = 0;
  std::vector<Integer> a;
  long truncation() const { return static_cast<long>(a.size()) - 1; }
};

// a_n = (1/2) sum_{Nm alpha = n} chi'(alpha), the 1/2 accounting for the units +-1.
// For odd powers alpha must be prime to sqrt(-7).
QExpansion qexp_from_ideals(const HeckeCharSpec& chi, long N);

// delta^l f = sum_j (4 pi y)^{-j} sum_n G[j][n] q^n.
struct NearlyHolomorphic {
  long weight = 0;  // weight of f
  long l = 0;
  std::vector<std::vector<Integer>> G;
  long truncation() const { return G.empty() ? 0 : static_cast<long>(G[0].size()) - 1; }
};

// Iterates delta_{w} = (1/2 pi i)(d/dz + w/(z - zbar)) for w = k, k+2, ..., k+2l-2.
NearlyHolomorphic maass_shimura_apply(const QExpansion& f, long k, long l);

// C_l = (kappa)_l / ((2 pi i)^l (2 i)^l) = (kappa)_l / (-4 pi)^l, real.
template <class T>
T maass_shimura_scalar(long kappa, long l) {
  using std::pow;
  return from_rational<T>(pochhammer(kappa, static_cast<unsigned>(l))) / pow(T(-4) * pi_v<T>(), T(l));
}

// Majorant for the omitted terms n > N of a nearly holomorphic series at height y.
double qseries_tail_bound(long weight, long l, long N, double y);

template <class T>
Complex<T> evaluate(const NearlyHolomorphic& F, const Complex<T>& tau) {
  require(tau.im > 0, "evaluate: tau must lie in the upper half-plane");
  Complex<T> q = cexp(Complex<T>(T(-2) * pi_v<T>() * tau.im, T(2) * pi_v<T>() * tau.re));
  T inv = T(1) / (T(4) * pi_v<T>() * tau.im), scale(1);
  Complex<T> total;
  for (std::size_t j = 0; j < F.G.size(); ++j, scale *= inv) {
    Complex<T> s;
    const auto& g = F.G[j];
    for (std::size_t n = g.size(); n-- > 0;) s = s * q + Complex<T>(from_integer<T>(g[n]));
    total += s * scale;
  }
  return total;
}

template <class T>
Complex<T> evaluate(const QExpansion& f, const Complex<T>& tau) {
  return evaluate(maass_shimura_apply(f, f.weight, 0), tau);
}

// Double-precision evaluation at many points through the SIMD q-series kernel.
std::vector<Complex<double>> evaluate_batch(const NearlyHolomorphic& F, const std::vector<Complex<double>>& taus);

struct LatticeSumConfig {
  long radius = 0;           // 0 selects the radius from the tail bound
  double tolerance = 1e-16;  // tail bound relative to e^{-2 pi y}
};

template <class T>
struct ThetaValue {
  Complex<T> value;
  double tail_bound = 0;
  long radius = 0;
};

// Majorant for the omitted lattice points with Nm > R.
double lattice_tail_bound(long k, long l, long R, double y);
long lattice_radius_for(long k, long l, double y, double tolerance);

// Classical form attached to the theta lift of phi'_{k,l}: with k = n,
// (1/2) y^{-l} sum_x w(x) xbar^k 1F1(-l, k+1, 4 pi Nm(x) y) e^{2 pi i Nm(x) tau},
// where w(x) = eps(x)^n and x prime to sqrt(-7) for odd n, w = 1 for even n.
// The factor 1/2 is the single global constant fixing a_1 = 1.
template <class T>
ThetaValue<T> theta_lattice_eval(const Complex<T>& tau, const HeckeCharSpec& chi, long l,
                                 const LatticeSumConfig& cfg = {}) {
  require(tau.im > 0, "theta_lattice_eval: tau must lie in the upper half-plane");
  require(l >= 0, "theta_lattice_eval: l must be nonnegative");
  long k = chi.n;
  double y = to_double(tau.im);
  double scale = std::exp(-2 * M_PI * y);
  long R = cfg.radius > 0 ? cfg.radius : lattice_radius_for(k, l, y, cfg.tolerance);
  double bound = lattice_tail_bound(k, l, R, y);
  if (bound > cfg.tolerance * scale)
    fail(ErrorKind::NotConverged, "theta_lattice_eval: radius " + std::to_string(R) +
                                      " too small; try --radius " +
                                      std::to_string(lattice_radius_for(k, l, y, cfg.tolerance)));
  KummerPoly F = KummerPoly::make(k, l);
  using std::sqrt;
  T pi = pi_v<T>(), s7 = sqrt(T(7));
  Complex<T> two_pi_i_tau = Complex<T>(T(0), T(2) * pi) * tau;
  Complex<T> sum;
  long cur = -1;
  Complex<T> shell_exp;
  T shell_poly(0);
  for (const auto& p : lattice_points(R)) {
    if (p.norm != cur) {
      cur = p.norm;
      shell_exp = cexp(two_pi_i_tau * T(cur));
      shell_poly = F.eval(T(4) * pi * T(cur) * tau.im);
    }
    int w = 1;
    if (k % 2) {
      if (p.norm % 7 == 0) continue;
      long r = (((2 * p.x + p.y) * 4) % 7 + 7) % 7;
      w = (r == 1 || r == 2 || r == 4) ? 1 : -1;
    }
    Complex<T> xb(T(p.x) + T(p.y) / 2, -T(p.y) * s7 / 2);
    Complex<T> term = cpow(xb, k) * shell_exp * shell_poly;
    if (w < 0) term = -term;
    sum += term;
  }
  using std::pow;
  ThetaValue<T> out;
  out.value = sum * (pow(tau.im, T(-l)) / 2);
  out.tail_bound = bound;
  out.radius = R;
  return out;
}

// Ratio theta_lattice_eval / delta^l f at several points; expected 1/C_l.
struct ProportionalityReport {
  long l = 0;
  std::vector<Complex<double>> ratios;
  Complex<double> mean;
  double max_deviation = 0;  // relative spread of the ratios
  double expected_abs = 0;   // |1/C_l| = (4 pi)^l / (kappa)_l
};
ProportionalityReport proportionality_constant(const HeckeCharSpec& chi, long l,
                                               const std::vector<Complex<double>>& taus,
                                               double tolerance = 1e-7);

// max over taus of | |f(-1/(N tau))| / (N^{k/2} |tau|^k |f(tau)|) - 1 |.
double fricke_defect(const QExpansion& f, long N, const std::vector<Complex<double>>& taus);

}  // namespace seesaw
