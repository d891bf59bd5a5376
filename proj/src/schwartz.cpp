#include "seesaw/schwartz.hpp"

#include <random>

#include "seesaw/kernels.hpp"

namespace seesaw {

KummerPoly KummerPoly::make(long k, long l) {
  require(l >= 0, "KummerPoly: l must be nonnegative");
  KummerPoly p;
  p.a = -l;
  p.b = (k < 0 ? -k : k) + 1;
  p.coeffs.resize(l + 1);
  Rational c = 1;
  for (long j = 0; j <= l; ++j) {
    p.coeffs[j] = c;
    c *= Rational(p.a + j) / Rational((p.b + j) * (j + 1));
  }
  return p;
}

Rational KummerPoly::eval(const Rational& t) const {
  Rational r = 0;
  for (std::size_t j = coeffs.size(); j-- > 0;) r = r * t + coeffs[j];
  return r;
}

std::vector<Rational> KummerPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t j = 1; j < coeffs.size(); ++j) d.push_back(coeffs[j] * static_cast<long>(j));
  if (d.empty()) d.push_back(0);
  return d;
}

bool verify_ode(long k, long l) {
  KummerPoly f = KummerPoly::make(k, l);
  if (f.degree() != l || f.coeffs[0] != 1 || sgn(f.coeffs.back()) == 0) return false;
  // Coefficient of t^j in t f'' + (b - t) f' - a f:
  // (j+1) j c_{j+1} + b (j+1) c_{j+1} - j c_j - a c_j.
  auto c = [&](long j) { return j >= 0 && j <= l ? f.coeffs[j] : Rational(0); };
  for (long j = 0; j <= l + 1; ++j) {
    Rational v = Rational((j + 1) * j + f.b * (j + 1)) * c(j + 1) - Rational(j + f.a) * c(j);
    if (sgn(v) != 0) return false;
  }
  return true;
}

// ---- GaussPoly ----

void GaussPoly::add(const Key& k, const Rational& c) {
  if (sgn(c) == 0) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
    return;
  }
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

GaussPoly GaussPoly::monomial(int i, int j, const Rational& c) {
  GaussPoly p;
  p.add({i, j}, c);
  return p;
}

GaussPoly GaussPoly::phi(long k, long l) {
  KummerPoly f = KummerPoly::make(k, l);
  int kk = static_cast<int>(k < 0 ? -k : k);
  GaussPoly p;
  Rational two_j = 1;
  // F(4 pi z zbar) = F(2 w wbar); zbar^k = (2pi)^{-k/2} wbar^k.
  for (long j = 0; j <= l; ++j, two_j *= 2) {
    int i = static_cast<int>(j), jj = static_cast<int>(j);
    if (k >= 0) jj += kk; else i += kk;
    p.add({i, jj}, f.coeffs[j] * two_j);
  }
  return p;
}

GaussPoly GaussPoly::d_w() const {
  GaussPoly r;
  for (auto& [key, c] : terms_) {
    auto [i, j] = key;
    if (i > 0) r.add({i - 1, j}, c * i);
    r.add({i, j + 1}, -c);
  }
  return r;
}

GaussPoly GaussPoly::d_wbar() const {
  GaussPoly r;
  for (auto& [key, c] : terms_) {
    auto [i, j] = key;
    if (j > 0) r.add({i, j - 1}, c * j);
    r.add({i + 1, j}, -c);
  }
  return r;
}

GaussPoly GaussPoly::times_wwbar() const {
  GaussPoly r;
  for (auto& [key, c] : terms_) r.add({key.first + 1, key.second + 1}, c);
  return r;
}

GaussPoly& GaussPoly::operator+=(const GaussPoly& o) {
  for (auto& [key, c] : o.terms_) add(key, c);
  return *this;
}

GaussPoly GaussPoly::operator*(const Rational& c) const {
  GaussPoly r;
  for (auto& [key, v] : terms_) r.add(key, v * c);
  return r;
}

Rational rotation_eigenvalue(long k, long l) {
  GaussPoly p = GaussPoly::phi(k, l);
  GaussPoly lp = p.times_wwbar() - p.d_wbar().d_w();
  auto& [key, c0] = *p.terms().begin();
  auto it = lp.terms().find(key);
  Rational lambda = it == lp.terms().end() ? Rational(0) : it->second / c0;
  if (!(lp == p * lambda))
    fail(ErrorKind::VerificationFailed, "rotation_eigenvalue: phi' is not an eigenvector");
  return lambda;
}

bool rotation_eigen_check(long k, long l) {
  long kk = k < 0 ? -k : k;
  try {
    return rotation_eigenvalue(k, l) == Rational(kk + 1 + 2 * l);
  } catch (const Error&) {
    return false;
  }
}

Rational phi_inner_product_rational_part(long k, long l) {
  unsigned kk = static_cast<unsigned>(k < 0 ? -k : k), ll = static_cast<unsigned>(l);
  Integer fk = factorial(kk);
  return make_rational(factorial(ll) * fk * fk, factorial(ll + kk));
}

double phi_inner_product_quadrature(long k, long l1, long l2, double h, double L) {
  long kk = k < 0 ? -k : k;
  KummerPoly p1 = KummerPoly::make(k, l1), p2 = KummerPoly::make(k, l2);
  std::vector<double> c1, c2;
  for (auto& c : p1.coeffs) c1.push_back(c.get_d());
  for (auto& c : p2.coeffs) c2.push_back(c.get_d());
  long m = static_cast<long>(std::ceil(L / h));
  std::vector<double> t, g;
  t.reserve((2 * m + 1) * (2 * m + 1));
  g.reserve(t.capacity());
  for (long i = -m; i <= m; ++i)
    for (long j = -m; j <= m; ++j) {
      double x = i * h, y = j * h, r2 = x * x + y * y;
      t.push_back(4 * M_PI * r2);
      g.push_back(2 * h * h * std::pow(r2, static_cast<double>(kk)) * std::exp(-4 * M_PI * r2));
    }
  return kernels::poly_pair_weighted_sum(c1.data(), c1.size(), c2.data(), c2.size(), t.data(), g.data(),
                                         t.size());
}

// ---- Maass-Shimura ----

namespace {

// sum c * y^a * T^j * e^{2 pi i N z} with c in Q(i).
using YT = std::map<std::pair<long, long>, QuadElem>;

void yt_add(YT& f, long a, long j, const QuadElem& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = f.emplace(std::make_pair(a, j), c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) f.erase(it);
  }
}

// (d/dz + w/(z - zbar)) using d_z y = -i/2, d_z T = -(i/2) T / y,
// d_z e = (i/2) (T / y) e and 1/(z - zbar) = -(i/2) / y.
YT raise(const YT& f, long w) {
  const QuadElem mi2(0, Rational(-1, 2), -1);
  YT g;
  for (auto& [key, c] : f) {
    auto [a, j] = key;
    yt_add(g, a - 1, j, c * mi2 * QuadElem::rational(a + j + w, -1));
    yt_add(g, a - 1, j + 1, -(c * mi2));
  }
  return g;
}

}  // namespace

QuadElem maass_shimura_expected(long k, long l) {
  long kappa = (k < 0 ? -k : k) + 1;
  QuadElem two_i(0, 2, -1);
  return QuadElem::rational(pochhammer(kappa, static_cast<unsigned>(l)), -1) / two_i.pow(l);
}

MaassShimuraSymbolic maass_shimura_symbolic(long k, long l) {
  require(l >= 0, "maass_shimura_symbolic: l must be nonnegative");
  MaassShimuraSymbolic r;
  r.kappa = (k < 0 ? -k : k) + 1;
  r.l = l;
  YT f;
  yt_add(f, 0, 0, QuadElem::rational(1, -1));
  for (long m = 0; m < l; ++m) f = raise(f, r.kappa + 2 * m);
  // Read the constant off the T^0 term and compare the whole family.
  auto it = f.find({-l, 0});
  if (it == f.end()) return r;
  r.constant = it->second;
  KummerPoly F = KummerPoly::make(r.kappa - 1, l);
  YT want;
  for (long j = 0; j <= l; ++j) yt_add(want, -l, j, r.constant * QuadElem::rational(F.coeffs[j], -1));
  r.matches = f == want;
  return r;
}

bool maass_shimura_phi_relation(long k, long l) {
  auto s = maass_shimura_symbolic(k, l);
  return s.matches && s.constant == maass_shimura_expected(k, l);
}

double maass_shimura_fd_residual(long k, long l, std::uint64_t seed, int samples) {
  using C = Complex<Mp>;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(-1.0, 1.0), Y(0.3, 1.5);
  long kk = k < 0 ? -k : k, kappa = kk + 1;
  Mp pi = pi_v<Mp>();
  Mp worst = 0;
  for (int s = 0; s < samples; ++s) {
    C v(Mp(U(rng)) * Mp(0.8), Mp(U(rng)) * Mp(0.8));
    Mp N = v.norm(), x0 = U(rng), y0 = Y(rng);
    for (long m = 0; m <= l; ++m) {
      KummerPoly Fm = KummerPoly::make(kk, m), Fn = KummerPoly::make(kk, m + 1);
      auto f = [&](const KummerPoly& F, long mm, const Mp& x, const Mp& y) {
        C e = cexp(C(Mp(-2) * pi * N * y, Mp(2) * pi * N * x));
        return e * (F.eval(Mp(4) * pi * N * y) * pow(y, Mp(-mm)));
      };
      // The unwinding identity relating phi'_{k,m} to f_m.
      {
        using std::sqrt;
        C lhs = cexp(C(Mp(0), Mp(2) * pi * x0 * N)) * ArchSchwartz(k, m)(v * sqrt(y0)) * pow(y0, Mp(0.5) - Mp(m));
        C mono = cpow(k >= 0 ? v.conj() : v, kk);
        C rhs = mono * f(Fm, m, x0, y0) * pow(y0, Mp(kappa) / 2);
        Mp r = (lhs - rhs).abs() / rhs.abs();
        if (r > worst) worst = r;
      }
      if (m == l) break;
      // Fourth-order central differences, d/dz = (d/dx - i d/dy) / 2.
      Mp h = Mp(1e-9);
      auto dx = (f(Fm, m, x0 - 2 * h, y0) - f(Fm, m, x0 + 2 * h, y0) +
                 (f(Fm, m, x0 + h, y0) - f(Fm, m, x0 - h, y0)) * Mp(8)) / (Mp(12) * h);
      auto dy = (f(Fm, m, x0, y0 - 2 * h) - f(Fm, m, x0, y0 + 2 * h) +
                 (f(Fm, m, x0, y0 + h) - f(Fm, m, x0, y0 - h)) * Mp(8)) / (Mp(12) * h);
      C dz = (dx - C(Mp(0), Mp(1)) * dy) / Mp(2);
      // w / (z - zbar) = w / (2 i y) = -i w / (2y).
      C lhs = dz + f(Fm, m, x0, y0) * C(Mp(0), -Mp(kappa + 2 * m) / (2 * y0));
      C rhs = f(Fn, m + 1, x0, y0) * C(Mp(0), -Mp(kappa + m) / 2);
      Mp r = (lhs - rhs).abs() / rhs.abs();
      if (r > worst) worst = r;
    }
  }
  return worst.convert_to<double>();
}

}  // namespace seesaw
