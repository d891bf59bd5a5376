#include "seesaw/qfield.hpp"

#include <algorithm>
#include <sstream>

namespace seesaw {

QuadElem::QuadElem(Rational a, Rational b, long u) : a_(std::move(a)), b_(std::move(b)), u_(u) {
  a_.canonicalize();
  b_.canonicalize();
  if (u >= 0) {
    mpz_class uu = u;
    require(!mpz_perfect_square_p(uu.get_mpz_t()), "QuadElem: u must be a nonsquare");
  }
}

void QuadElem::check(const QuadElem& o) const {
  require(u_ == o.u_, "QuadElem: mixing elements of different fields");
}

QuadElem& QuadElem::operator+=(const QuadElem& o) {
  check(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& o) {
  check(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& o) {
  check(o);
  Rational a = a_ * o.a_ + Rational(u_) * b_ * o.b_;
  b_ = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  return *this;
}

QuadElem QuadElem::inverse() const {
  Rational n = norm();
  if (sgn(n) == 0) fail(ErrorKind::InvalidArgument, "QuadElem: inverse of zero");
  return {a_ / n, -b_ / n, u_};
}

QuadElem& QuadElem::operator/=(const QuadElem& o) {
  check(o);
  return *this *= o.inverse();
}

QuadElem QuadElem::pow(long n) const {
  QuadElem base = n < 0 ? inverse() : *this;
  unsigned long e = n < 0 ? -static_cast<unsigned long>(n) : n;
  QuadElem r(1, 0, u_);
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

bool QuadElem::is_integral() const {
  Rational t = trace(), n = norm();
  return t.get_den() == 1 && n.get_den() == 1;
}

std::string QuadElem::to_string() const {
  std::ostringstream os;
  os << a_.get_str();
  if (sgn(b_) != 0) os << (sgn(b_) > 0 ? "+" : "-") << Rational(abs(b_)).get_str() << "*sqrt(" << u_ << ")";
  return os.str();
}

IdealE::IdealE(QuadElem generator) : gen_(std::move(generator)) {
  require(!gen_.is_zero(), "IdealE: zero generator");
}

bool operator==(const IdealE& x, const IdealE& y) {
  if (x.gen_.u() != y.gen_.u()) return false;
  QuadElem r = x.gen_ / y.gen_;
  return r.is_integral() && r.norm() == 1;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

bool is_prime(long n) { return is_prime(Integer(n)); }

long valuation(const Integer& x, long p) {
  require(sgn(x) != 0, "valuation of zero");
  Integer t = abs(x);
  long v = 0;
  while (mpz_divisible_ui_p(t.get_mpz_t(), p)) {
    mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), p);
    ++v;
  }
  return v;
}

long valuation(const Rational& x, long p) {
  require(sgn(x) != 0, "valuation of zero");
  return valuation(Integer(x.get_num()), p) - valuation(Integer(x.get_den()), p);
}

std::vector<long> prime_divisors(Integer n) {
  n = abs(n);
  require(sgn(n) != 0, "prime_divisors of zero");
  std::vector<long> out;
  for (long p = 2; Integer(p) * p <= n; p += (p == 2 ? 1 : 2)) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      out.push_back(p);
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    }
  }
  if (n > 1) {
    if (!n.fits_slong_p()) fail(ErrorKind::Unsupported, "prime_divisors: cofactor exceeds long");
    out.push_back(n.get_si());
  }
  return out;
}

int legendre(const Integer& a, long p) {
  if (p <= 2 || !is_prime(p)) fail(ErrorKind::InvalidArgument, "legendre: p must be an odd prime");
  Integer pp = p;
  return mpz_legendre(a.get_mpz_t(), pp.get_mpz_t());
}

namespace {

// Residue of an odd integer mod 8.
long mod8(const Integer& x) {
  Integer r = x % 8;
  if (r < 0) r += 8;
  return r.get_si();
}

int hilbert_int(Integer a, Integer b, long p) {
  long alpha = valuation(a, p), beta = valuation(b, p);
  Integer pp = p, pa, pb;
  mpz_pow_ui(pa.get_mpz_t(), pp.get_mpz_t(), alpha);
  mpz_pow_ui(pb.get_mpz_t(), pp.get_mpz_t(), beta);
  Integer ua = a / pa, ub = b / pb;
  if (p == 2) {
    long x = mod8(ua), y = mod8(ub);
    long eps_x = ((x - 1) / 2) & 1, eps_y = ((y - 1) / 2) & 1;
    long om_x = ((x * x - 1) / 8) & 1, om_y = ((y * y - 1) / 8) & 1;
    long e = eps_x * eps_y + alpha * om_y + beta * om_x;
    return (e & 1) ? -1 : 1;
  }
  int s = ((alpha * beta) & 1) && (((p - 1) / 2) & 1) ? -1 : 1;
  if (beta & 1) s *= legendre(ua, p);
  if (alpha & 1) s *= legendre(ub, p);
  return s;
}

Integer num_times_den(const Rational& x) { return Integer(x.get_num()) * Integer(x.get_den()); }

}  // namespace

int hilbert_symbol(const Rational& a, const Rational& b, const Place& v) {
  if (sgn(a) == 0 || sgn(b) == 0) fail(ErrorKind::InvalidArgument, "hilbert_symbol: zero argument");
  if (v.is_infinite()) return (sgn(a) < 0 && sgn(b) < 0) ? -1 : 1;
  if (!is_prime(v.p)) fail(ErrorKind::InvalidArgument, "hilbert_symbol: place is not prime");
  // n/d = n*d / d^2, so the square class is that of n*d.
  return hilbert_int(num_times_den(a), num_times_den(b), v.p);
}

std::vector<Place> hilbert_support(const Rational& a, const Rational& b) {
  Integer m = 2 * num_times_den(a) * num_times_den(b);
  std::vector<Place> out;
  for (long p : prime_divisors(m)) out.push_back(Place::finite(p));
  out.push_back(Place::infinite());
  return out;
}

std::vector<Place> ramification_set(const Rational& a, const Rational& b) {
  std::vector<Place> out;
  for (const Place& v : hilbert_support(a, b))
    if (hilbert_symbol(a, b, v) == -1) out.push_back(v);
  return out;
}

std::string to_string(const std::vector<Place>& places) {
  std::string s = "{";
  for (std::size_t i = 0; i < places.size(); ++i) {
    if (i) s += ",";
    s += places[i].to_string();
  }
  return s + "}";
}

}  // namespace seesaw
