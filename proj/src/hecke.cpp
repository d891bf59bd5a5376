#include "seesaw/hecke.hpp"

namespace seesaw {

HeckeCharSpec canonical_char(long n, bool normalized) {
  require(n >= 1, "canonical_char: n must be positive");
  return {-7, n, {n, 0}, normalized};
}

int epsilon7(const QuadElem& alpha) {
  require(alpha.u() == -7, "epsilon7: element must lie in Q(sqrt(-7))");
  require(alpha.is_integral(), "epsilon7: element must be integral");
  // alpha = a + b sqrt(-7) = a mod sqrt(-7); 2a is an integer and 2 is invertible mod 7.
  Integer twice_a = Integer(2 * alpha.a());
  Integer r = (twice_a * 4) % 7;
  if (r < 0) r += 7;
  if (r == 0) fail(ErrorKind::InvalidArgument, "epsilon7: element not coprime to sqrt(-7)");
  return legendre(r, 7);
}

QuadElem conductor(const HeckeCharSpec& chi) {
  return chi.n % 2 ? QuadElem::sqrt_u(chi.field_u) : QuadElem::rational(1, chi.field_u);
}

QuadElem eval_exact(const HeckeCharSpec& chi, const QuadElem& alpha) {
  require(chi.field_u == -7, "eval: only the canonical family over Q(sqrt(-7)) is supported");
  require(!alpha.is_zero(), "eval: zero generator");
  QuadElem v = alpha.pow(chi.n);
  if (chi.n % 2 == 0) return v;
  if (valuation(alpha.norm(), 7) != 0)
    fail(ErrorKind::InvalidArgument, "eval: ideal not coprime to the conductor");
  return epsilon7(alpha) == 1 ? v : -v;
}

QuadElem eval_twisted(const TwistedCharSpec& chi, const QuadElem& alpha) {
  require(!alpha.is_zero(), "eval_twisted: zero argument");
  return (alpha / alpha.conj()).pow(chi.base.n);
}

LocalType local_type(long u, long p) {
  if (p == 2) {
    long r = ((u % 8) + 8) % 8;
    if (r == 1) return LocalType::Split;
    if (r == 5) return LocalType::Unramified;
    return LocalType::Ramified;
  }
  int l = legendre(u, p);
  if (l == 0) return LocalType::Ramified;
  return l == 1 ? LocalType::Split : LocalType::Unramified;
}

long conductor_pi(LocalType type, long c1, long c2, long val_4) {
  switch (type) {
    case LocalType::Split: return c1 + c2;
    case LocalType::Unramified: return val_4 + 2 * c1;
    case LocalType::Ramified: return 1 + val_4 + c1;
  }
  return 0;
}

long char_conductor_exponent(const HeckeCharSpec& chi, long p) {
  return (p == 7 && chi.n % 2) ? 1 : 0;
}

long newform_level(const HeckeCharSpec& chi) {
  // chi_can^n is unramified away from 7 and 2 splits, so only 7 contributes.
  long level = 1;
  for (long p : {2L, 3L, 5L, 7L}) {
    LocalType t = local_type(chi.field_u, p);
    long c = char_conductor_exponent(chi, p);
    long e = conductor_pi(t, c, c, valuation(Rational(4), p));
    for (long i = 0; i < e; ++i) level *= p;
  }
  return level;
}

}  // namespace seesaw
