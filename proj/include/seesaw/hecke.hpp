#pragma once

#include <utility>

#include "seesaw/qfield.hpp"

namespace seesaw {

// chi_can^n for Q(sqrt(-7)): on ideals coprime to 7, (alpha) -> eps(alpha)^n alpha^n.
struct HeckeCharSpec {
  long field_u = -7;
  long n = 1;
  std::pair<long, long> infinity_type{1, 0};
  bool normalized = false;
};

// alpha -> chi(alpha) / chi(conj alpha); trivial on rationals.
struct TwistedCharSpec {
  HeckeCharSpec base;
};

HeckeCharSpec canonical_char(long n, bool normalized = false);

// The mod-sqrt(-7) quadratic character on integers of Q(sqrt(-7)) coprime to 7.
int epsilon7(const QuadElem& alpha);

// Generator of the conductor: sqrt(-7) for odd n, 1 for even n.
QuadElem conductor(const HeckeCharSpec& chi);

// Exact unnormalized value eps(alpha)^n alpha^n on a generator. For even n the
// value alpha^n is used for every alpha, including those divisible by sqrt(-7).
QuadElem eval_exact(const HeckeCharSpec& chi, const QuadElem& alpha);

template <class T>
Complex<T> eval_ideal(const HeckeCharSpec& chi, const IdealE& a) {
  Complex<T> v = eval_exact(chi, a.generator()).template embed<T>();
  if (chi.normalized) {
    using std::pow;
    v /= pow(from_rational<T>(a.norm()), T(chi.n) / 2);
  }
  return v;
}

// Exact value (alpha / conj alpha)^n of the twisted character.
QuadElem eval_twisted(const TwistedCharSpec& chi, const QuadElem& alpha);

enum class LocalType { Split, Unramified, Ramified };

LocalType local_type(long u, long p);

// Conductor exponent of the automorphic induction at one place. For split
// places c1, c2 are the conductors of the two components; otherwise c1 = c(chi_v).
long conductor_pi(LocalType type, long c1, long c2, long val_4);

// Conductor exponent of chi_can^n at the prime ideal above p.
long char_conductor_exponent(const HeckeCharSpec& chi, long p);

// Global level of the newform attached to chi.
long newform_level(const HeckeCharSpec& chi);

}  // namespace seesaw
