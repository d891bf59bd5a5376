#include "seesaw/thetalift.hpp"

#include <algorithm>

#include "seesaw/config.hpp"
#include "seesaw/kernels.hpp"

namespace seesaw {

std::vector<LatticePoint> lattice_points(long R) {
  require(R >= 0, "lattice_points: negative radius");
  std::vector<LatticePoint> pts;
  // Nm = (x + y/2)^2 + 7 y^2 / 4.
  long ymax = static_cast<long>(std::floor(std::sqrt(4.0 * R / 7.0))) + 1;
  for (long y = -ymax; y <= ymax; ++y) {
    long xmax = static_cast<long>(std::floor(std::sqrt(static_cast<double>(R)))) + ymax + 1;
    for (long x = -xmax; x <= xmax; ++x) {
      long n = x * x + x * y + 2 * y * y;
      if (n == 0 || n > R) continue;
      pts.push_back({x, y, n});
    }
  }
  std::sort(pts.begin(), pts.end(), [](const LatticePoint& a, const LatticePoint& b) {
    if (a.norm != b.norm) return a.norm < b.norm;
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  });
  return pts;
}

QExpansion qexp_from_ideals(const HeckeCharSpec& chi, long N) {
  require(chi.field_u == -7, "qexp_from_ideals: only Q(sqrt(-7)) is supported");
  require(N >= 1, "qexp_from_ideals: N must be positive");
  require(chi.n >= 1 && chi.n <= 7, "qexp_from_ideals: power out of range");
  const long n = chi.n;
  std::vector<__int128> acc(N + 1, 0);
  for (const auto& p : lattice_points(N)) {
    int w = 1;
    if (n % 2) {
      if (p.norm % 7 == 0) continue;
      long r = (((2 * p.x + p.y) * 4) % 7 + 7) % 7;
      w = (r == 1 || r == 2 || r == 4) ? 1 : -1;
    }
    // alpha^n = A + B omega, omega^2 = omega - 2.
    __int128 A = 1, B = 0;
    for (long i = 0; i < n; ++i) {
      __int128 a2 = A * p.x - 2 * B * p.y;
      __int128 b2 = A * p.y + B * p.x + B * p.y;
      A = a2;
      B = b2;
    }
    acc[p.norm] += w * (2 * A + B);  // twice the real part
  }
  QExpansion f;
  f.weight = n + 1;
  f.level = newform_level(chi);
  f.char_power = n;
  f.a.assign(N + 1, 0);
  for (long m = 1; m <= N; ++m) {
    // Sum over both units and both real-part halves.
    if (acc[m] % 4 != 0) fail(ErrorKind::VerificationFailed, "qexp_from_ideals: non-integral coefficient");
    __int128 v = acc[m] / 4;
    bool neg = v < 0;
    if (neg) v = -v;
    Integer z = 0;
    Integer base = 1;
    while (v > 0) {
      z += base * static_cast<unsigned long>(v % 1000000000);
      base *= 1000000000;
      v /= 1000000000;
    }
    f.a[m] = neg ? Integer(-z) : z;
  }
  return f;
}

NearlyHolomorphic maass_shimura_apply(const QExpansion& f, long k, long l) {
  require(l >= 0, "maass_shimura_apply: l must be nonnegative");
  NearlyHolomorphic F;
  F.weight = k;
  F.l = l;
  F.G.assign(l + 1, std::vector<Integer>(f.a.size(), 0));
  F.G[0] = f.a;
  // delta_w sum_j G_j (4 pi y)^{-j} q^n: d/dz q^n = 2 pi i n q^n,
  // d/dz (4 pi y)^{-j} = 2 pi i j (4 pi y)^{-j-1}, w/(z - zbar) = -2 pi i w (4 pi y)^{-1}.
  for (long m = 0; m < l; ++m) {
    long w = k + 2 * m;
    auto next = F.G;
    for (long j = 0; j <= l; ++j)
      for (std::size_t n = 0; n < f.a.size(); ++n) {
        Integer v = F.G[j][n] * static_cast<long>(n);
        if (j > 0) v += F.G[j - 1][n] * (j - 1 - w);
        next[j][n] = v;
      }
    F.G = std::move(next);
  }
  return F;
}

double qseries_tail_bound(long weight, long l, long N, double y) {
  // |a_n| <= d(n) n^{(k-1)/2} <= n^{(k+1)/2}; |G_{l-j}(n)| <= (k)_l C(l,j) n^j |a_n|.
  double poch = 1;
  for (long i = 0; i < l; ++i) poch *= weight + i;
  double inv = 1 / (4 * M_PI * y), s = 0;
  for (long n = N + 1;; ++n) {
    double t = poch * std::pow(n, 0.5 * (weight + 1)) * std::pow(n + inv, l) * std::exp(-2 * M_PI * n * y);
    s += t;
    if (n > N + 10 && t < 1e-40 * std::max(s, 1e-300)) break;
    if (n > N + 1000000) break;
  }
  return s;
}

std::vector<Complex<double>> evaluate_batch(const NearlyHolomorphic& F, const std::vector<Complex<double>>& taus) {
  std::size_t m = taus.size(), nc = F.G.empty() ? 0 : F.G[0].size();
  std::vector<double> qr(m), qi(m), re(m), im(m), zero(nc, 0.0), coef(nc);
  for (std::size_t i = 0; i < m; ++i) {
    require(taus[i].im > 0, "evaluate_batch: tau must lie in the upper half-plane");
    auto q = cexp(Complex<double>(-2 * M_PI * taus[i].im, 2 * M_PI * taus[i].re));
    qr[i] = q.re;
    qi[i] = q.im;
  }
  std::vector<Complex<double>> out(m);
  for (std::size_t j = 0; j < F.G.size(); ++j) {
    for (std::size_t n = 0; n < nc; ++n) coef[n] = F.G[j][n].get_d();
    kernels::qseries_horner(coef.data(), zero.data(), nc, qr.data(), qi.data(), re.data(), im.data(), m);
    for (std::size_t i = 0; i < m; ++i)
      out[i] += Complex<double>(re[i], im[i]) * std::pow(4 * M_PI * taus[i].im, -static_cast<double>(j));
  }
  return out;
}

double lattice_tail_bound(long k, long l, long R, double y) {
  // At most 2n lattice points of norm n, |xbar^k| = n^{k/2}, |1F1(-l, b, t)| <= (1+t)^l.
  double s = 0;
  for (long n = R + 1;; ++n) {
    double t = 0.5 * std::pow(y, -static_cast<double>(l)) * 2.0 * n * std::pow(n, 0.5 * k) *
               std::pow(1 + 4 * M_PI * n * y, l) * std::exp(-2 * M_PI * n * y);
    s += t;
    if (n > R + 10 && t < 1e-40 * std::max(s, 1e-300)) break;
    if (n > R + 1000000) break;
  }
  return s;
}

long lattice_radius_for(long k, long l, double y, double tolerance) {
  double target = tolerance * std::exp(-2 * M_PI * y);
  long R = 1;
  while (lattice_tail_bound(k, l, R, y) > target) R = R < 8 ? R + 1 : R + R / 4;
  return R;
}

ProportionalityReport proportionality_constant(const HeckeCharSpec& chi, long l,
                                               const std::vector<Complex<double>>& taus, double tolerance) {
  require(!taus.empty(), "proportionality_constant: no sample points");
  long kappa = chi.n + 1;
  double ymin = taus[0].im;
  for (auto& t : taus) ymin = std::min(ymin, t.im);
  long N = 8;
  while (qseries_tail_bound(kappa, l, N, ymin) > 1e-18 * std::exp(-2 * M_PI * ymin)) N += N / 2;
  auto F = maass_shimura_apply(qexp_from_ideals(chi, N), kappa, l);
  ProportionalityReport rep;
  rep.l = l;
  for (auto& t : taus) {
    auto lat = theta_lattice_eval<double>(t, chi, l).value;
    rep.ratios.push_back(lat / evaluate(F, t));
    rep.mean += rep.ratios.back();
  }
  rep.mean /= static_cast<double>(taus.size());
  for (auto& r : rep.ratios) rep.max_deviation = std::max(rep.max_deviation, (r - rep.mean).abs() / rep.mean.abs());
  rep.expected_abs = 1 / std::abs(maass_shimura_scalar<double>(kappa, l));
  if (rep.max_deviation > tolerance)
    fail(ErrorKind::VerificationFailed, "proportionality_constant: ratio not constant across tau (spread " +
                                            format_real(rep.max_deviation) + ")");
  return rep;
}

double fricke_defect(const QExpansion& f, long N, const std::vector<Complex<double>>& taus) {
  double worst = 0;
  auto F = maass_shimura_apply(f, f.weight, 0);
  for (auto& t : taus) {
    Complex<double> w = Complex<double>(-1.0) / (t * static_cast<double>(N));
    double lhs = evaluate(F, w).abs();
    double rhs = std::pow(N, 0.5 * f.weight) * std::pow(t.abs(), f.weight) * evaluate(F, t).abs();
    worst = std::max(worst, std::abs(lhs / rhs - 1));
  }
  return worst;
}

}  // namespace seesaw
