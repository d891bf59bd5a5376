#include "seesaw/periods.hpp"

#include <cmath>
#include <sstream>

#include "seesaw/config.hpp"
#include "seesaw/schwartz.hpp"

namespace seesaw {

Mat2Q torus_embedding(const QuadElem& x) {
  require(x.u() == -7, "torus_embedding: element must lie in Q(sqrt(-7))");
  Rational a = x.a(), b = x.b(), u = x.u();
  return {a, Rational(-2 * b), Rational(-b * u / 2), a};
}

OrderCheck embedding_order_check(long p) {
  require(p >= 2 && is_prime(p), "embedding_order_check: p must be prime");
  OrderCheck out;
  out.p = p;
  out.integral = true;
  std::ostringstream os;
  const QuadElem basis[2] = {QuadElem(1, 0, -7), QuadElem(make_rational(1, 2), make_rational(1, 2), -7)};
  const char* names[2] = {"1", "omega"};
  for (int i = 0; i < 2; ++i) {
    Mat2Q m = torus_embedding(basis[i]);
    for (int e = 0; e < 4; ++e) {
      if (m[e] == 0) continue;
      long v = valuation(m[e], p);
      if (v < 0) {
        out.integral = false;
        os << names[i] << " entry " << e << " has valuation " << v << "; ";
      }
    }
    if (p == 7 && m[2] != 0 && valuation(m[2], 7) < 1) out.lower_left_divisible = false;
  }
  out.detail = os.str();
  return out;
}

namespace {

// Coefficients of zbar^k F(4 pi |z|^2) in the real coordinates z = x1 + i x2.
template <class T>
std::map<std::pair<int, int>, Complex<T>> phi_monomials(long k, long l) {
  require(k >= 0, "phi_monomials: k must be nonnegative");
  KummerPoly F = KummerPoly::make(k, l);
  auto binom = [](long n, long r) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
    return b;
  };
  std::map<std::pair<int, int>, Complex<T>> P;
  T four_pi = T(4) * pi_v<T>();
  using std::pow;
  for (long j = 0; j <= F.degree(); ++j) {
    T cj = from_rational<T>(F.coeffs[j]) * pow(four_pi, T(j));
    for (long m = 0; m <= k; ++m) {
      // (-i)^m
      Complex<T> im = m % 4 == 0 ? Complex<T>(T(1), T(0))
                    : m % 4 == 1 ? Complex<T>(T(0), T(-1))
                    : m % 4 == 2 ? Complex<T>(T(-1), T(0))
                                 : Complex<T>(T(0), T(1));
      for (long r = 0; r <= j; ++r) {
        T c = cj * from_integer<T>(Integer(binom(k, m) * binom(j, r)));
        P[{static_cast<int>(k - m + 2 * r), static_cast<int>(m + 2 * (j - r))}] += im * c;
      }
    }
  }
  return P;
}

// omega(r(theta)) phi'_{k,l} with the theta-dependent data precomputed.
template <class T>
class RotatedPhi {
 public:
  RotatedPhi(long k, long l, const T& theta) {
    using std::cos;
    using std::sin;
    using std::pow;
    T s = sin(theta), co = cos(theta);
    T c = -s, d = co, a = co;
    require(c != 0, "weil_rotation_eval: sin(theta) must be nonzero");
    pi_ = pi_v<T>();
    A_ = Complex<T>(T(2) * c * c, T(-2) * c * d);
    two_pi_A_ = A_ * (T(2) * pi_);
    inv_sqrt_A_ = Complex<T>(T(1)) / csqrt(A_);
    a_over_c_ = a / c;
    for (const auto& [key, v] : phi_monomials<T>(k, l)) {
      terms_.push_back({key.first, key.second, v * pow(c, T(key.first + key.second))});
      maxp_ = std::max({maxp_, key.first, key.second});
    }
    // gamma = -i, factor 2 from the self-dual measure, c from omega(m(c))
    pref_ = Complex<T>(T(0), T(-2) * c);
  }

  Complex<T> operator()(const Complex<T>& x) const {
    std::vector<Complex<T>> I1 = ints(T(2) * x.re), I2 = ints(T(2) * x.im);
    Complex<T> s;
    for (const auto& t : terms_) s += t.c * I1[t.p] * I2[t.q];
    return pref_ * s * cexp(Complex<T>(T(0), T(2) * pi_ * a_over_c_ * x.norm()));
  }

 private:
  struct Term {
    int p, q;
    Complex<T> c;
  };

  // I_p(xi) = int t^p e^{-pi A t^2} e^{-2 pi i xi t} dt.
  std::vector<Complex<T>> ints(const T& xi) const {
    std::vector<Complex<T>> I(maxp_ + 1);
    I[0] = inv_sqrt_A_ * cexp(Complex<T>(-pi_ * xi * xi) / A_);
    Complex<T> step(T(0), T(-2) * pi_ * xi);
    if (maxp_ >= 1) I[1] = step * I[0] / two_pi_A_;
    for (int p = 1; p < maxp_; ++p) I[p + 1] = (I[p - 1] * T(p) + step * I[p]) / two_pi_A_;
    return I;
  }

  T pi_, a_over_c_;
  Complex<T> A_, two_pi_A_, inv_sqrt_A_, pref_;
  std::vector<Term> terms_;
  int maxp_ = 0;
};

constexpr long kFamilyK = 2;  // chi_can^2

}  // namespace

template <class T>
Complex<T> weil_rotation_eval(long k, long l, const T& theta, const Complex<T>& x) {
  return RotatedPhi<T>(k, l, theta)(x);
}

template Complex<double> weil_rotation_eval<double>(long, long, const double&, const Complex<double>&);
template Complex<Mp> weil_rotation_eval<Mp>(long, long, const Mp&, const Complex<Mp>&);

std::map<std::string, double> period_constants() {
  return {{"vol_C1", 2 * M_PI}, {"circles", 2}, {"c_fin", 0.5}};
}

Complex<Mp> period_lhs(long l, const PeriodConfig& cfg, double* error_bound) {
  require(l >= 0, "period_lhs: l must be nonnegative");
  require(cfg.qexp_terms >= 20, "period_lhs: too few q-expansion terms");
  const long kappa = kFamilyK + 1, wt = kappa + 2 * l;
  Complex<Mp> tau = cm_point<Mp>();
  QExpansion f = qexp_from_ideals(canonical_char(kFamilyK), cfg.qexp_terms);
  NearlyHolomorphic F = maass_shimura_apply(f, kappa, l);
  Complex<Mp> v = evaluate(F, tau);
  using std::pow;
  Mp two_pi = Mp(2) * pi_v<Mp>();
  // (2 pi)^2 c_fin y0^{wt/2} * theta, with theta = 2 delta^l f / C_l at the CM point
  Mp scale = two_pi * two_pi / 2 * pow(tau.im, Mp(wt) / 2) * 2 / maass_shimura_scalar<Mp>(kappa, l);
  if (error_bound)
    *error_bound = std::abs(to_double(scale)) * qseries_tail_bound(kappa, l, F.truncation(), to_double(tau.im));
  return v * scale;
}

Complex<Mp> period_rhs(long l, const PeriodConfig& cfg, double* error_bound, long* radius_used) {
  require(l >= 0, "period_rhs: l must be nonnegative");
  require(cfg.theta1_nodes >= 1 && cfg.theta2_nodes >= 3, "period_rhs: too few quadrature nodes");
  const long k = kFamilyK, wt = k + 1 + 2 * l, m2 = cfg.second_weight ? cfg.second_weight : wt;
  Complex<Mp> tau = cm_point<Mp>();
  const Mp y0 = tau.im;
  const double y0d = to_double(y0);
  // |sqrt(y0) phi(sqrt(y0) xi)| <= y0^{(k+1)/2 + l} * 2 * (lattice_tail_bound term)
  const double bscale = 2 * std::pow(y0d, 0.5 * (k + 1) + l);
  long R = cfg.radius;
  if (R <= 0) {
    R = 8;
    while (bscale * lattice_tail_bound(k, l, R, y0d) > cfg.tolerance) R += 4;
  }
  double tail = bscale * lattice_tail_bound(k, l, R, y0d);
  if (tail > 1e-6) fail(ErrorKind::NotConverged, "period_rhs: radius " + std::to_string(R) + " leaves tail " +
                                                     format_real(tail) + "; try --radius " + std::to_string(2 * R));

  using std::sqrt;
  const Mp pi = pi_v<Mp>(), s7 = sqrt(Mp(7)), sy = sqrt(y0);
  std::vector<Complex<Mp>> xis;
  for (const auto& p : lattice_points(R)) xis.emplace_back(Mp(p.x) + Mp(p.y) / 2, Mp(p.y) * s7 / 2);

  const int M1 = cfg.theta1_nodes, M2 = cfg.theta2_nodes;
  std::vector<Complex<Mp>> partial(M2);
  parallel_for(static_cast<std::size_t>(M2), [&](std::size_t j) {
    Mp th2 = Mp(2) * pi * (Mp(static_cast<long>(j)) + Mp(0.5)) / M2;
    RotatedPhi<Mp> phi(k, l, th2);
    Complex<Mp> acc;
    for (int i = 0; i < M1; ++i) {
      Mp th1 = Mp(2) * pi * (Mp(i) + Mp(0.5)) / M1;
      Complex<Mp> rot = cexp(Complex<Mp>(Mp(0), -th1)) * sy;
      Complex<Mp> s;
      for (const auto& xi : xis) s += phi(rot * xi);
      // first character on E^1 and second character on SO(2)
      acc += s * cexp(Complex<Mp>(Mp(0), -Mp(k) * th1 - Mp(m2) * th2));
    }
    partial[j] = acc;
  });
  Complex<Mp> total;
  for (const auto& p : partial) total += p;
  Mp norm = Mp(M1) * Mp(M2);
  Mp two_pi = Mp(2) * pi;
  total = total * (sy / norm * two_pi * two_pi / 2);
  if (error_bound) *error_bound = tail * to_double(two_pi * two_pi / 2);
  if (radius_used) *radius_used = R;
  return total;
}

namespace {
Complex<double> to_cd(const Complex<Mp>& z) { return {to_double(z.re), to_double(z.im)}; }
}  // namespace

PeriodReport period_report(long l, const PeriodConfig& cfg) {
  PeriodReport r;
  r.l = l;
  Complex<Mp> lhs = period_lhs(l, cfg, &r.lhs_error_bound);
  Complex<Mp> rhs = period_rhs(l, cfg, &r.rhs_error_bound, &r.radius);
  r.lhs = to_cd(lhs);
  r.rhs = to_cd(rhs);
  r.ratio = to_cd(rhs / lhs);
  r.theta1_nodes = cfg.theta1_nodes;
  r.theta2_nodes = cfg.theta2_nodes;
  r.qexp_terms = cfg.qexp_terms;
  r.constants = period_constants();
  return r;
}

PeriodIdentity period_identity_report(long l_max, const PeriodConfig& cfg, double tolerance) {
  require(l_max >= 0 && l_max <= 3, "period_identity_report: l_max must lie in [0, 3]");
  PeriodIdentity out;
  out.all_nonzero = true;
  std::ostringstream diag;
  for (long l = 0; l <= l_max; ++l) {
    out.reports.push_back(period_report(l, cfg));
    const auto& r = out.reports.back();
    if (!(r.lhs.abs() > 0) || !(r.rhs.abs() > 0)) out.all_nonzero = false;
    double spread = (r.ratio - out.reports.front().ratio).abs(), defect = (r.ratio - Complex<double>(1)).abs();
    out.max_ratio_spread = std::max(out.max_ratio_spread, spread);
    out.max_ratio_defect = std::max(out.max_ratio_defect, defect);
    diag << "l=" << l << " lhs=" << format_real(r.lhs.re) << "+" << format_real(r.lhs.im) << "i ratio-1="
         << format_real(defect) << "; ";
  }
  out.passed = out.all_nonzero && out.max_ratio_spread < tolerance && out.max_ratio_defect < tolerance;
  if (!out.passed) out.diagnostic = diag.str();
  return out;
}

}  // namespace seesaw
