#include "seesaw/config.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "seesaw/numeric.hpp"

namespace seesaw {

unsigned worker_count() {
  if (const char* s = std::getenv("SEESAW_THREADS")) {
    long v = std::strtol(s, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  unsigned h = std::thread::hardware_concurrency();
  return h ? h : 1;
}

namespace {
unsigned g_bits = 0;
}

void set_precision_bits(unsigned bits) {
  if (bits < 53) bits = 53;
  g_bits = bits;
  Mp::default_precision(static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)));
}

namespace {
struct PrecisionInit {
  PrecisionInit() { set_precision_bits(kDefaultPrecisionBits); }
} g_precision_init;
}  // namespace

unsigned precision_bits() {
  if (g_bits == 0) set_precision_bits(kDefaultPrecisionBits);
  return g_bits;
}

Rational pochhammer(const Rational& a, unsigned n) {
  Rational r = 1;
  for (unsigned i = 0; i < n; ++i) r *= a + i;
  return r;
}

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_real(const Mp& x) {
  return x.str(static_cast<std::streamsize>(Mp::default_precision()), std::ios_base::scientific);
}

}  // namespace seesaw
